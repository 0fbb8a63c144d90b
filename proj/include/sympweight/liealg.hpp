#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "weights.hpp"

namespace sympweight {

/// Monomial basis vector of Sym^n V (x) Sym^m V*: exponent tuples over the
/// e-basis of V and the dual f-basis.
struct ExponentPair {
    std::vector<int> a;  // 2r exponents over e_1..e_2r
    std::vector<int> b;  // 2r exponents over f_1..f_2r

    friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

    int rank() const { return static_cast<int>(a.size()) / 2; }
    long long degree_a() const { return std::accumulate(a.begin(), a.end(), 0LL); }
    long long degree_b() const { return std::accumulate(b.begin(), b.end(), 0LL); }
};

/// Weight of a monomial: coordinate i is (a_i - a_{2r+1-i}) - (b_i - b_{2r+1-i});
/// the dual factors carry negated weights.
inline Weight weight_of(const ExponentPair& p) {
    const int r = p.rank();
    Weight w(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const int j = 2 * r - 1 - i;
        w[static_cast<std::size_t>(i)] =
            (p.a[static_cast<std::size_t>(i)] - p.a[static_cast<std::size_t>(j)]) -
            (p.b[static_cast<std::size_t>(i)] - p.b[static_cast<std::size_t>(j)]);
    }
    return w;
}

/// Sparse integer linear combination of monomials, all sharing the same
/// ambient degrees (n, m) and rank. No stored zero coefficients.
struct FormalVector {
    int rank = 0;
    long long deg_n = 0;
    long long deg_m = 0;
    std::map<ExponentPair, Int> terms;

    FormalVector() = default;
    FormalVector(int rank_, long long n, long long m) : rank(rank_), deg_n(n), deg_m(m) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const ExponentPair& p, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend bool operator==(const FormalVector& lhs, const FormalVector& rhs) {
        return lhs.rank == rhs.rank && lhs.deg_n == rhs.deg_n && lhs.deg_m == rhs.deg_m &&
               lhs.terms == rhs.terms;
    }
};

inline FormalVector operator*(const Int& scalar, const FormalVector& v) {
    FormalVector out(v.rank, v.deg_n, v.deg_m);
    if (scalar == 0) return out;
    for (const auto& [p, c] : v.terms) out.terms.emplace(p, scalar * c);
    return out;
}

inline FormalVector operator+(const FormalVector& u, const FormalVector& v) {
    FormalVector out = u;
    for (const auto& [p, c] : v.terms) {
        auto it = out.terms.find(p);
        if (it == out.terms.end()) {
            out.terms.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

/// Debug dump: coefficient, then "a-tuple x b-tuple", one term per line,
/// canonical order.
inline std::string to_string(const FormalVector& v) {
    std::ostringstream os;
    for (const auto& [p, c] : v.terms) {
        os << c.str() << " (";
        for (std::size_t i = 0; i < p.a.size(); ++i) os << (i ? "," : "") << p.a[i];
        os << ") x (";
        for (std::size_t i = 0; i < p.b.size(); ++i) os << (i ? "," : "") << p.b[i];
        os << ")\n";
    }
    return os.str();
}

/// One of the r^2 positive root vectors of sp(2r, C). Indices are
/// 1-based as in the standard basis listing; pair kinds need i < j <= r,
/// the long kind a single i <= r.
struct RootVectorSpec {
    enum class Kind { pair_lowering, pair_raising, long_root };
    Kind kind;
    int i = 0;
    int j = 0;
};

inline std::vector<RootVectorSpec> positive_root_vectors(int rank) {
    std::vector<RootVectorSpec> out;
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            out.push_back({RootVectorSpec::Kind::pair_lowering, i, j});
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            out.push_back({RootVectorSpec::Kind::pair_raising, i, j});
    for (int i = 1; i <= rank; ++i) out.push_back({RootVectorSpec::Kind::long_root, i, 0});
    return out;
}

/// The positive root carried by a root vector, as an r-tuple.
inline Weight root_of(const RootVectorSpec& x, int rank) {
    Weight w(static_cast<std::size_t>(rank), 0);
    switch (x.kind) {
        case RootVectorSpec::Kind::pair_lowering:
            w[static_cast<std::size_t>(x.i - 1)] = 1;
            w[static_cast<std::size_t>(x.j - 1)] = -1;
            break;
        case RootVectorSpec::Kind::pair_raising:
            w[static_cast<std::size_t>(x.i - 1)] = 1;
            w[static_cast<std::size_t>(x.j - 1)] = 1;
            break;
        case RootVectorSpec::Kind::long_root:
            w[static_cast<std::size_t>(x.i - 1)] = 2;
            break;
    }
    return w;
}

namespace detail {

// Shifted copy of p with a[from]-1, a[to]+1 (0-based); caller guarantees
// a[from] > 0 through the zero-coefficient check.
inline ExponentPair shift_a(ExponentPair p, int to, int from) {
    ++p.a[static_cast<std::size_t>(to)];
    --p.a[static_cast<std::size_t>(from)];
    return p;
}

inline ExponentPair shift_b(ExponentPair p, int from, int to) {
    --p.b[static_cast<std::size_t>(from)];
    ++p.b[static_cast<std::size_t>(to)];
    return p;
}

inline void accumulate(FormalVector& out, const ExponentPair& p, const Int& coeff) {
    if (coeff == 0) return;
    auto it = out.terms.find(p);
    if (it == out.terms.end()) {
        out.terms.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) out.terms.erase(it);
    }
}

}  // namespace detail

/// Action of a positive root vector on a monomial of Sym^n V (x) Sym^m V*.
/// Terms whose shift would drive an exponent negative carry coefficient
/// zero and are omitted.
inline FormalVector apply_root_vector(const RootVectorSpec& x, const ExponentPair& p) {
    const int r = p.rank();
    FormalVector out(r, p.degree_a(), p.degree_b());
    auto A = [&](int idx1) { return Int(p.a[static_cast<std::size_t>(idx1 - 1)]); };
    auto B = [&](int idx1) { return Int(p.b[static_cast<std::size_t>(idx1 - 1)]); };
    const int i = x.i;
    const int j = x.j;
    const int n2 = 2 * r;
    switch (x.kind) {
        case RootVectorSpec::Kind::pair_lowering:
            // (E_ij - E_{2r+1-j,2r+1-i})
            detail::accumulate(out, detail::shift_a(p, i - 1, j - 1), A(j));
            detail::accumulate(out, detail::shift_a(p, n2 - j, n2 - i), -A(n2 + 1 - i));
            detail::accumulate(out, detail::shift_b(p, i - 1, j - 1), -B(i));
            detail::accumulate(out, detail::shift_b(p, n2 - j, n2 - i), B(n2 + 1 - j));
            break;
        case RootVectorSpec::Kind::pair_raising:
            // (E_{i,2r+1-j} + E_{j,2r+1-i})
            detail::accumulate(out, detail::shift_a(p, i - 1, n2 - j), A(n2 + 1 - j));
            detail::accumulate(out, detail::shift_a(p, j - 1, n2 - i), A(n2 + 1 - i));
            detail::accumulate(out, detail::shift_b(p, i - 1, n2 - j), -B(i));
            detail::accumulate(out, detail::shift_b(p, j - 1, n2 - i), -B(j));
            break;
        case RootVectorSpec::Kind::long_root:
            // E_{i,2r+1-i}
            detail::accumulate(out, detail::shift_a(p, i - 1, n2 - i), A(n2 + 1 - i));
            detail::accumulate(out, detail::shift_b(p, i - 1, n2 - i), -B(i));
            break;
    }
    return out;
}

inline FormalVector apply_root_vector(const RootVectorSpec& x, const FormalVector& v) {
    FormalVector out(v.rank, v.deg_n, v.deg_m);
    for (const auto& [p, c] : v.terms) {
        const FormalVector image = apply_root_vector(x, p);
        for (const auto& [q, d] : image.terms) detail::accumulate(out, q, c * d);
    }
    return out;
}

/// Multiplication by sum_i e_i (x) f_i:
/// Sym^{n-1} V (x) Sym^{m-1} V* -> Sym^n V (x) Sym^m V*.
inline FormalVector rho(const FormalVector& v) {
    FormalVector out(v.rank, v.deg_n + 1, v.deg_m + 1);
    for (const auto& [p, c] : v.terms) {
        for (std::size_t i = 0; i < p.a.size(); ++i) {
            ExponentPair q = p;
            ++q.a[i];
            ++q.b[i];
            detail::accumulate(out, q, c);
        }
    }
    return out;
}

/// Dual contraction Sym^n V (x) Sym^m V* -> Sym^{n-1} V (x) Sym^{m-1} V*:
/// sum_i a_i b_i times the monomial with a_i, b_i decremented.
inline FormalVector rho_star(const FormalVector& v) {
    if (v.deg_n < 1 || v.deg_m < 1)
        throw std::invalid_argument("rho_star: degrees must both be >= 1");
    FormalVector out(v.rank, v.deg_n - 1, v.deg_m - 1);
    for (const auto& [p, c] : v.terms) {
        for (std::size_t i = 0; i < p.a.size(); ++i) {
            const Int factor = Int(p.a[i]) * p.b[i];
            if (factor == 0) continue;
            ExponentPair q = p;
            --q.a[i];
            --q.b[i];
            detail::accumulate(out, q, c * factor);
        }
    }
    return out;
}

/// The explicit highest-weight vector v_p of weight (n+m-p, p, 0, ..., 0)
/// in ker rho* inside Sym^n V (x) Sym^m V*.
inline FormalVector highest_weight_vector(int rank, long long n, long long m, long long p) {
    if (rank < 2) throw std::invalid_argument("highest_weight_vector: rank must be >= 2");
    if (m < 1 || n < m) throw std::invalid_argument("highest_weight_vector: need n >= m >= 1");
    if (p < 0 || p > m) throw std::invalid_argument("highest_weight_vector: need 0 <= p <= m");
    FormalVector out(rank, n, m);
    const std::size_t n2 = 2 * static_cast<std::size_t>(rank);
    for (long long i = 0; i <= p; ++i) {
        ExponentPair term;
        term.a.assign(n2, 0);
        term.b.assign(n2, 0);
        term.a[0] = static_cast<int>(n - p + i);
        term.a[1] = static_cast<int>(p - i);
        term.b[n2 - 2] = static_cast<int>(i);
        term.b[n2 - 1] = static_cast<int>(m - i);
        Int coeff = binom(p, i);
        if (i % 2 != 0) coeff = -coeff;
        detail::accumulate(out, term, coeff);
    }
    return out;
}

/// True iff every positive root vector annihilates v.
inline bool is_highest_weight(const FormalVector& v) {
    if (v.is_zero()) throw std::invalid_argument("is_highest_weight: zero vector");
    for (const auto& x : positive_root_vectors(v.rank))
        if (!apply_root_vector(x, v).is_zero()) return false;
    return true;
}

/// Rewrites the dual factors via the isomorphism V* = V
/// (f_i -> e_{2r+1-i} for i > r, f_j -> -e_{2r+1-j} for j <= r), folding m
/// into the a-side. Result is a single signed monomial of Sym^{n+m} V.
inline FormalVector dual_to_standard(const ExponentPair& p) {
    const int r = p.rank();
    FormalVector out(r, p.degree_a() + p.degree_b(), 0);
    ExponentPair q;
    q.a = p.a;
    q.b.assign(p.b.size(), 0);
    long long low_dual = 0;
    for (std::size_t i = 0; i < p.b.size(); ++i) {
        q.a[p.a.size() - 1 - i] += p.b[i];
        if (i < static_cast<std::size_t>(r)) low_dual += p.b[i];
    }
    detail::accumulate(out, q, low_dual % 2 == 0 ? Int(1) : Int(-1));
    return out;
}

/// All monomials of Sym^n V (x) Sym^m V* in canonical (lexicographic)
/// order.
inline std::vector<ExponentPair> monomial_basis(int rank, long long n, long long m) {
    const int n2 = 2 * rank;
    std::vector<std::vector<int>> a_side, b_side;
    auto gen = [&](long long degree, std::vector<std::vector<int>>& out_list) {
        std::vector<int> cur(static_cast<std::size_t>(n2), 0);
        auto rec = [&](auto&& self, int pos, long long remaining) -> void {
            if (pos == n2 - 1) {
                cur[static_cast<std::size_t>(pos)] = static_cast<int>(remaining);
                out_list.push_back(cur);
                return;
            }
            for (long long v = remaining; v >= 0; --v) {
                cur[static_cast<std::size_t>(pos)] = static_cast<int>(v);
                self(self, pos + 1, remaining - v);
            }
        };
        rec(rec, 0, degree);
    };
    gen(n, a_side);
    gen(m, b_side);
    std::vector<ExponentPair> basis;
    basis.reserve(a_side.size() * b_side.size());
    for (const auto& a : a_side)
        for (const auto& b : b_side) basis.push_back({a, b});
    return basis;
}

/// Exact rank of an integer matrix by fraction-free Gaussian elimination.
inline std::size_t integer_rank(std::vector<std::vector<Int>> mat) {
    if (mat.empty()) return 0;
    const std::size_t rows = mat.size();
    const std::size_t cols = mat[0].size();
    std::size_t rank = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && mat[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(mat[rank], mat[pivot_row]);
        const Int pivot = mat[rank][col];
        for (std::size_t row = rank + 1; row < rows; ++row) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mat[row][c] = (pivot * mat[row][c] - mat[row][col] * mat[rank][c]) / prev_pivot;
            }
            mat[row][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

/// Matrix of a linear map between monomial bases; column per source
/// monomial, row per target monomial.
template <class Map>
std::vector<std::vector<Int>> matrix_of_map(Map&& f, const std::vector<ExponentPair>& source,
                                            const std::vector<ExponentPair>& target) {
    std::map<ExponentPair, std::size_t> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);
    std::vector<std::vector<Int>> mat(target.size(), std::vector<Int>(source.size(), 0));
    for (std::size_t col = 0; col < source.size(); ++col) {
        const FormalVector image = f(source[col]);
        for (const auto& [q, c] : image.terms) {
            auto it = row_of.find(q);
            if (it == row_of.end()) throw std::logic_error("matrix_of_map: image outside target basis");
            mat[it->second][col] = c;
        }
    }
    return mat;
}

}  // namespace sympweight
