#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "weights.hpp"

namespace sympweight {

/// Highest weight (n, m, 0, ..., 0) of a bivariate irreducible
/// representation of sp(2r, C). Requires n >= m >= 0 and rank >= 2.
struct BivariateHighestWeight {
    long long n;
    long long m;
    int rank;

    BivariateHighestWeight(long long n_, long long m_, int rank_) : n(n_), m(m_), rank(rank_) {
        if (rank < 2) throw std::invalid_argument("highest weight: rank must be >= 2");
        if (m < 0 || n < m)
            throw std::invalid_argument("highest weight: need n >= m >= 0");
    }

    Weight as_weight() const {
        Weight w(static_cast<std::size_t>(rank), 0);
        w[0] = n;
        if (rank > 1) w[1] = m;
        return w;
    }
};

namespace detail {

/// Compositions of `total` into `parts` non-negative integers, visited in
/// colexicographic order.
template <class F>
void for_each_composition(long long total, int parts, F&& fn) {
    std::vector<long long> c(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == 0) {
            c[0] = remaining;
            fn(c);
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            self(self, pos - 1, remaining - v);
        }
    };
    rec(rec, parts - 1, total);
}

// Caps (c_1,...,c_2r) with c_j = |x_j| + c_{2r+1-j} for j <= r, given the
// tail (c_{r+1},...,c_2r).
inline CapVector caps_from_tail(const Weight& w, const std::vector<long long>& tail) {
    const std::size_t r = w.size();
    CapVector caps(2 * r);
    for (std::size_t j = 0; j < r; ++j) caps[r + j] = tail[j];
    for (std::size_t j = 0; j < r; ++j) caps[j] = std::llabs(w[j]) + caps[2 * r - 1 - j];
    return caps;
}

// bounded_count(caps, m) - bounded_count(caps, m - 1). The sieve route
// evaluates the collapsed alternating sum with binomial top 2r-2 directly;
// the two agree by the Pascal identity.
inline Int bounded_count_diff(const CapVector& caps, long long m, Counter counter) {
    if (counter == Counter::sieve)
        return sieve_eval(caps, m, static_cast<long long>(caps.size()) - 2);
    return bounded_count_dp(caps, m) - bounded_count_dp(caps, m - 1);
}

}  // namespace detail

/// Multiplicity of w in Sym^n V for the standard representation V of
/// sp(2r, C): binom(k + r - 1, r - 1) on layer k of the nested diamonds,
/// zero off the support.
inline Int mult_sym(long long n, int rank, const Weight& w) {
    if (n < 0) throw std::invalid_argument("mult_sym: n must be non-negative");
    if (rank < 2 || w.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("mult_sym: weight length must equal rank");
    const auto k = layer_index(w, n, 0);
    if (!k) return 0;
    return binom(*k + rank - 1, rank - 1);
}

/// Multiplicity of w in Sym^n V (x) Sym^m V: the sum over tail compositions
/// of layer k of bounded composition counts at m.
inline Int mult_tensor(long long n, long long m, int rank, const Weight& w,
                       Counter counter = Counter::dp) {
    if (n < 0 || m < 0) throw std::invalid_argument("mult_tensor: degrees must be non-negative");
    if (rank < 2 || w.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("mult_tensor: weight length must equal rank");
    const auto k = layer_index(w, n, m);
    if (!k) return 0;
    Int total = 0;
    detail::for_each_composition(*k, rank, [&](const std::vector<long long>& tail) {
        total += bounded_count(detail::caps_from_tail(w, tail), m, counter);
    });
    return total;
}

/// Multiplicity of w in the irreducible representation V(n, m, 0, ..., 0):
/// difference of the layer-k sum at argument m and the layer-(k-1) sum at
/// argument m-1, each with binomial top 2r-2. Always >= 0.
inline Int mult_irrep(const BivariateHighestWeight& hw, const Weight& w,
                      Counter counter = Counter::dp) {
    if (w.size() != static_cast<std::size_t>(hw.rank))
        throw std::invalid_argument("mult_irrep: weight length must equal rank");
    const auto k = layer_index(w, hw.n, hw.m);
    if (!k) return 0;
    Int total = 0;
    detail::for_each_composition(*k, hw.rank, [&](const std::vector<long long>& tail) {
        total += detail::bounded_count_diff(detail::caps_from_tail(w, tail), hw.m, counter);
    });
    if (*k >= 1) {
        detail::for_each_composition(*k - 1, hw.rank, [&](const std::vector<long long>& tail) {
            total -= detail::bounded_count_diff(detail::caps_from_tail(w, tail), hw.m - 1, counter);
        });
    }
    return total;
}

/// Signed evaluation of the Grothendieck-group identity for
/// V(n, m, 0, ..., 0): up to four mult_tensor terms, symmetric powers with
/// negative degree contributing nothing. Equals mult_irrep everywhere.
inline Int mult_irrep_via_virtual(const BivariateHighestWeight& hw, const Weight& w,
                                  Counter counter = Counter::dp) {
    if (w.size() != static_cast<std::size_t>(hw.rank))
        throw std::invalid_argument("mult_irrep_via_virtual: weight length must equal rank");
    const long long n = hw.n;
    const long long m = hw.m;
    if (m == 0) return mult_tensor(n, 0, hw.rank, w, counter);
    if (m == 1) {
        Int total = mult_tensor(n, 1, hw.rank, w, counter);
        total -= mult_tensor(n + 1, 0, hw.rank, w, counter);
        if (n >= 1) total -= mult_tensor(n - 1, 0, hw.rank, w, counter);
        return total;
    }
    Int total = mult_tensor(n, m, hw.rank, w, counter);
    total += mult_tensor(n, m - 2, hw.rank, w, counter);
    total -= mult_tensor(n - 1, m - 1, hw.rank, w, counter);
    total -= mult_tensor(n + 1, m - 1, hw.rank, w, counter);
    return total;
}

/// Dimension of V(n, m, 0, ..., 0) by summing multiplicities over Weyl
/// orbits of the dominant support.
inline Int dim_irrep(const BivariateHighestWeight& hw, Counter counter = Counter::dp) {
    Int total = 0;
    for (const auto& [w, k] : enumerate_dominant_weights(hw.n, hw.m, hw.rank)) {
        const Int mult = mult_irrep(hw, w, counter);
        if (mult != 0) total += mult * orbit_size(w);
    }
    return total;
}

}  // namespace sympweight
