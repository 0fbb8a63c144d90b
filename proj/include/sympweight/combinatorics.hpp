#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace sympweight {

/// Caps (c_1,...,c_n) for bounded composition counting. Every entry >= 0,
/// length >= 1.
using CapVector = std::vector<long long>;

/// Binomial coefficient extended to arbitrary integer top argument:
/// binom(a, n) = 0 for a < n (in particular for all negative a), otherwise
/// a!/(n!(a-n)!). Exact.
inline Int binom(long long a, long long n) {
    if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
    if (a < n) return 0;
    n = std::min(n, a - n);
    Int result = 1;
    // Each prefix product is itself a binomial, so the division is exact.
    for (long long i = 1; i <= n; ++i) {
        result *= a - n + i;
        result /= i;
    }
    return result;
}

/// Multiset of the sums of all i-element subsets of cap positions.
/// Returned sorted ascending; multiplicities preserved.
inline std::vector<long long> enumerate_subsums(const CapVector& caps, long long i) {
    const long long n = static_cast<long long>(caps.size());
    if (i < 0 || i > n) throw std::invalid_argument("enumerate_subsums: i out of range");
    std::vector<long long> sums;
    std::vector<long long> chosen;
    auto rec = [&](auto&& self, long long pos, long long remaining, long long acc) -> void {
        if (remaining == 0) {
            sums.push_back(acc);
            return;
        }
        if (n - pos < remaining) return;
        self(self, pos + 1, remaining - 1, acc + caps[pos]);
        self(self, pos + 1, remaining, acc);
    };
    rec(rec, 0, i, 0);
    std::sort(sums.begin(), sums.end());
    return sums;
}

namespace detail {

// Alternating subset sum  sum_i (-1)^i sum_{s in S_i} binom(m-(s+i)+top, top)
// walked over all 2^n subsets of the caps.
inline Int sieve_eval(const CapVector& caps, long long m, long long top) {
    Int total = 0;
    const std::size_t n = caps.size();
    auto rec = [&](auto&& self, std::size_t pos, long long count, long long sum, int sign) -> void {
        if (pos == n) {
            Int term = binom(m - (sum + count) + top, top);
            if (sign > 0)
                total += term;
            else
                total -= term;
            return;
        }
        self(self, pos + 1, count, sum, sign);
        self(self, pos + 1, count + 1, sum + caps[pos], -sign);
    };
    rec(rec, 0, 0, 0, 1);
    return total;
}

inline void check_caps(const CapVector& caps) {
    if (caps.empty()) throw std::invalid_argument("caps must be non-empty");
    for (long long c : caps)
        if (c < 0) throw std::invalid_argument("caps must be non-negative");
}

}  // namespace detail

/// Number of tuples (x_1,...,x_n) of non-negative integers with sum m and
/// x_j <= c_j, by the inclusion-exclusion sieve. Exponential in the number
/// of caps; kept as the reference counter.
inline Int bounded_count_sieve(const CapVector& caps, long long m) {
    detail::check_caps(caps);
    if (m < 0) return 0;
    const long long total = std::accumulate(caps.begin(), caps.end(), 0LL);
    if (m > total) return 0;
    return detail::sieve_eval(caps, m, static_cast<long long>(caps.size()) - 1);
}

/// Same count as bounded_count_sieve, by a one-dimensional convolution over
/// the caps. O(n*m) arithmetic operations.
inline Int bounded_count_dp(const CapVector& caps, long long m) {
    detail::check_caps(caps);
    if (m < 0) return 0;
    const long long total = std::accumulate(caps.begin(), caps.end(), 0LL);
    if (m > total) return 0;
    std::vector<Int> dp(static_cast<std::size_t>(m) + 1, 0);
    dp[0] = 1;
    std::vector<Int> prefix(dp.size() + 1);
    for (long long c : caps) {
        prefix[0] = 0;
        for (std::size_t t = 0; t < dp.size(); ++t) prefix[t + 1] = prefix[t] + dp[t];
        for (long long t = m; t >= 0; --t) {
            const long long lo = std::max<long long>(0, t - c);
            dp[static_cast<std::size_t>(t)] =
                prefix[static_cast<std::size_t>(t) + 1] - prefix[static_cast<std::size_t>(lo)];
        }
    }
    return dp[static_cast<std::size_t>(m)];
}

/// Which counter backs the bounded-composition counts inside the
/// multiplicity formulas.
enum class Counter { dp, sieve };

inline Int bounded_count(const CapVector& caps, long long m, Counter counter = Counter::dp) {
    return counter == Counter::dp ? bounded_count_dp(caps, m) : bounded_count_sieve(caps, m);
}

}  // namespace sympweight
