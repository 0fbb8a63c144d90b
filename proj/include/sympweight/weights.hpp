#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"

namespace sympweight {

/// A point in the weight lattice of sp(2r, C): an r-tuple of integers.
using Weight = std::vector<long long>;

inline bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) return false;
        if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
    }
    return true;
}

/// Canonical representative of w under the Weyl group of signed
/// permutations: absolute values sorted non-increasing. Idempotent.
inline Weight dominant_rep(Weight w) {
    for (auto& x : w) x = std::llabs(x);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

/// Layer index k with sum |x_j| = n + m - 2k, when w lies in the support
/// lattice of a degree-(n+m) diagram; absent on parity mismatch or when
/// the weight is outside the diagram.
inline std::optional<long long> layer_index(const Weight& w, long long n, long long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("layer_index: negative degree");
    long long abs_sum = 0;
    for (long long x : w) abs_sum += std::llabs(x);
    const long long d = n + m - abs_sum;
    if (d < 0 || d % 2 != 0) return std::nullopt;
    return d / 2;
}

/// Number of distinct signed-permutation images of a dominant weight:
/// r!/(prod over repeated values) * 2^(# nonzero entries).
inline Int orbit_size(const Weight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("orbit_size: weight not dominant");
    Int size = 1;
    for (std::size_t i = 2; i <= w.size(); ++i) size *= i;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (i < w.size() && w[i] == w[i - 1]) {
            ++run;
        } else {
            for (std::size_t j = 2; j <= run; ++j) size /= j;
            run = 1;
        }
    }
    for (long long x : w)
        if (x != 0) size *= 2;
    return size;
}

/// All dominant weights in the support of a degree-(n+m) diagram, each with
/// its layer k, sorted lexicographically descending.
inline std::vector<std::pair<Weight, long long>> enumerate_dominant_weights(long long n, long long m,
                                                                            int rank) {
    if (n < 0 || m < 0) throw std::invalid_argument("enumerate_dominant_weights: negative degree");
    if (rank < 2) throw std::invalid_argument("enumerate_dominant_weights: rank must be >= 2");
    std::vector<std::pair<Weight, long long>> out;
    Weight current(static_cast<std::size_t>(rank), 0);
    const long long total = n + m;
    for (long long k = 0; 2 * k <= total; ++k) {
        const long long target = total - 2 * k;
        // Partitions of `target` into at most `rank` parts.
        auto rec = [&](auto&& self, int pos, long long remaining, long long max_part) -> void {
            if (pos == rank) {
                if (remaining == 0) out.emplace_back(current, k);
                return;
            }
            const long long hi = std::min(remaining, max_part);
            for (long long v = hi; v >= 0; --v) {
                if (remaining - v > (rank - pos - 1) * v) continue;
                current[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, remaining - v, v);
            }
        };
        rec(rec, 0, target, target);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

}  // namespace sympweight
