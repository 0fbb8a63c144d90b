#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "liealg.hpp"
#include "multiplicity.hpp"
#include "weights.hpp"

namespace sympweight {

/// Thrown when a brute-force enumeration would exceed the configured
/// budget. Never truncates silently.
struct enumeration_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long long default_enumeration_budget = 10'000'000;

/// Full weight diagram of an ambient space: weight -> multiplicity.
struct WeightTable {
    int rank = 0;
    long long n = 0;
    long long m = 0;
    std::map<Weight, Int> mult;

    Int total() const {
        Int t = 0;
        for (const auto& [w, c] : mult) t += c;
        return t;
    }

    Int at(const Weight& w) const {
        auto it = mult.find(w);
        return it == mult.end() ? Int(0) : it->second;
    }
};

/// Ground truth for mult_tensor: enumerate every monomial pair of
/// Sym^n V (x) Sym^m V and tally weights. Both tensor factors are copies
/// of V, so the weight is read off c_i = a_i + b_i.
inline WeightTable brute_tensor_weights(long long n, long long m, int rank,
                                        long long budget = default_enumeration_budget) {
    if (rank < 2) throw std::invalid_argument("brute_tensor_weights: rank must be >= 2");
    if (n < 0 || m < 0) throw std::invalid_argument("brute_tensor_weights: negative degree");
    const Int size = binom(n + 2 * rank - 1, 2 * rank - 1) * binom(m + 2 * rank - 1, 2 * rank - 1);
    if (size > budget)
        throw enumeration_budget_error("brute_tensor_weights: " + size.str() +
                                       " monomial pairs exceed budget " + std::to_string(budget));
    WeightTable table;
    table.rank = rank;
    table.n = n;
    table.m = m;
    const int n2 = 2 * rank;
    detail::for_each_composition(n, n2, [&](const std::vector<long long>& a) {
        detail::for_each_composition(m, n2, [&](const std::vector<long long>& b) {
            Weight w(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i) {
                const std::size_t lo = static_cast<std::size_t>(i);
                const std::size_t hi = static_cast<std::size_t>(n2 - 1 - i);
                w[lo] = (a[lo] + b[lo]) - (a[hi] + b[hi]);
            }
            ++table.mult[w];
        });
    });
    return table;
}

namespace detail {

inline long long dot(const Weight& u, const Weight& v) {
    long long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline Weight weyl_vector(int rank) {
    Weight rho(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) rho[static_cast<std::size_t>(i)] = rank - i;
    return rho;
}

// Positive roots of C_r in epsilon coordinates: e_i - e_j, e_i + e_j
// (i < j), 2 e_i.
inline std::vector<Weight> positive_roots(int rank) {
    std::vector<Weight> roots;
    for (const auto& x : positive_root_vectors(rank)) roots.push_back(root_of(x, rank));
    return roots;
}

// lambda - mu is a non-negative integer combination of simple roots:
// all partial sums of the difference non-negative, the full sum even.
inline bool dominates(const Weight& lambda, const Weight& mu) {
    long long partial = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        partial += lambda[i] - mu[i];
        if (partial < 0) return false;
    }
    return partial % 2 == 0;
}

}  // namespace detail

/// Freudenthal recursion for irreducible multiplicities in type C_r;
/// memoized over dominant representatives. Independent of the sieve
/// formulas.
class FreudenthalTable {
public:
    FreudenthalTable(Weight highest, int rank)
        : lambda_(std::move(highest)),
          rank_(rank),
          roots_(detail::positive_roots(rank)),
          delta_(detail::weyl_vector(rank)) {
        if (!is_dominant(lambda_))
            throw std::invalid_argument("FreudenthalTable: highest weight not dominant");
        Weight shifted = lambda_;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += delta_[i];
        lambda_norm_ = detail::dot(shifted, shifted);
    }

    Int multiplicity(const Weight& w) {
        if (w.size() != static_cast<std::size_t>(rank_))
            throw std::invalid_argument("FreudenthalTable: weight length must equal rank");
        return mult_dominant(dominant_rep(w));
    }

private:
    Int mult_dominant(const Weight& mu) {
        if (mu == lambda_) return 1;
        if (!detail::dominates(lambda_, mu)) return 0;
        auto it = memo_.find(mu);
        if (it != memo_.end()) return it->second;
        Weight shifted = mu;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += delta_[i];
        const long long denom = lambda_norm_ - detail::dot(shifted, shifted);
        Int numer = 0;
        for (const auto& alpha : roots_) {
            Weight up = mu;
            for (long long t = 1;; ++t) {
                for (std::size_t i = 0; i < up.size(); ++i) up[i] += alpha[i];
                const Weight rep = dominant_rep(up);
                if (!detail::dominates(lambda_, rep)) break;
                const Int m_up = mult_dominant(rep);
                if (m_up != 0) numer += m_up * detail::dot(up, alpha);
            }
        }
        Int result = 2 * numer;
        if (denom <= 0) {
            if (result != 0)
                throw std::logic_error("Freudenthal: vanishing denominator with nonzero sum");
            result = 0;
        } else {
            result /= denom;
        }
        memo_.emplace(mu, result);
        return result;
    }

    Weight lambda_;
    int rank_;
    std::vector<Weight> roots_;
    Weight delta_;
    long long lambda_norm_ = 0;
    std::map<Weight, Int> memo_;
};

/// Multiplicity of w in the irreducible C_r module of highest weight hw,
/// by the Freudenthal recursion.
inline Int freudenthal_mult(const Weight& hw, const Weight& w, int rank) {
    FreudenthalTable table(hw, rank);
    return table.multiplicity(w);
}

/// Weyl dimension formula for C_r, exact. Aborts loudly if the final
/// product fails to be integral.
inline Int weyl_dim(const Weight& hw, int rank) {
    if (!is_dominant(hw)) throw std::invalid_argument("weyl_dim: weight not dominant");
    if (hw.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("weyl_dim: weight length must equal rank");
    const Weight delta = detail::weyl_vector(rank);
    Weight shifted = hw;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += delta[i];
    Int numer = 1, denom = 1;
    for (const auto& alpha : detail::positive_roots(rank)) {
        numer *= detail::dot(shifted, alpha);
        denom *= detail::dot(delta, alpha);
    }
    if (numer % denom != 0)
        throw std::logic_error("weyl_dim: non-integral product, inconsistent root data");
    return numer / denom;
}

}  // namespace sympweight
