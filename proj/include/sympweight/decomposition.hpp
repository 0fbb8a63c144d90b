#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "multiplicity.hpp"
#include "weights.hpp"

namespace sympweight {

/// Element of the Grothendieck group spanned by symbols
/// <Sym^a V (x) Sym^b V>. Symbols with a negative index are dropped at
/// construction; no zero coefficients are stored.
struct VirtualModule {
    int rank = 0;
    std::map<std::pair<long long, long long>, long long> terms;

    void add(long long a, long long b, long long coeff) {
        if (a < 0 || b < 0 || coeff == 0) return;
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }
};

/// The Grothendieck-group expansion of V(n, m, 0, ..., 0) in tensor
/// products of symmetric powers of the standard representation.
inline VirtualModule virtual_irrep(const BivariateHighestWeight& hw) {
    VirtualModule vm;
    vm.rank = hw.rank;
    if (hw.m == 0) {
        vm.add(hw.n, 0, 1);
    } else if (hw.m == 1) {
        vm.add(hw.n, 1, 1);
        vm.add(hw.n + 1, 0, -1);
        vm.add(hw.n - 1, 0, -1);
    } else {
        vm.add(hw.n, hw.m, 1);
        vm.add(hw.n, hw.m - 2, 1);
        vm.add(hw.n - 1, hw.m - 1, -1);
        vm.add(hw.n + 1, hw.m - 1, -1);
    }
    return vm;
}

/// Signed weight multiplicity of a virtual module.
inline Int virtual_mult(const VirtualModule& vm, const Weight& w, Counter counter = Counter::dp) {
    Int total = 0;
    for (const auto& [symbol, coeff] : vm.terms)
        total += Int(coeff) * mult_tensor(symbol.first, symbol.second, vm.rank, w, counter);
    return total;
}

/// One failed weight in a decomposition check.
struct WeightViolation {
    Weight w;
    Int expected;
    Int actual;
};

struct DecompositionReport {
    long long n = 0;
    long long m = 0;
    int rank = 0;
    long long weights_checked = 0;
    std::vector<WeightViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Verifies Sym^n V (x) Sym^m V = (Sym^{n-1} V (x) Sym^{m-1} V) + sum over
/// p of V(n+m-p, p, 0, ..., 0) on every dominant weight of the support.
inline DecompositionReport check_prop2(long long n, long long m, int rank,
                                       Counter counter = Counter::dp) {
    if (m < 1 || n < m) throw std::invalid_argument("check_prop2: need n >= m >= 1");
    DecompositionReport report;
    report.n = n;
    report.m = m;
    report.rank = rank;
    for (const auto& [w, k] : enumerate_dominant_weights(n, m, rank)) {
        const Int lhs = mult_tensor(n, m, rank, w, counter);
        Int rhs = mult_tensor(n - 1, m - 1, rank, w, counter);
        for (long long p = 0; p <= m; ++p)
            rhs += mult_irrep(BivariateHighestWeight(n + m - p, p, rank), w, counter);
        ++report.weights_checked;
        if (lhs != rhs) report.violations.push_back({w, lhs, rhs});
    }
    return report;
}

/// Verifies the two-sided balance obtained by combining consecutive
/// decompositions: T(n,m) + T(n,m-2) = T(n+1,m-1) + V(n,m) + T(n-1,m-1)
/// on every dominant weight of the support.
inline DecompositionReport check_balance(long long n, long long m, int rank,
                                         Counter counter = Counter::dp) {
    if (m < 2 || n < m) throw std::invalid_argument("check_balance: need n >= m >= 2");
    DecompositionReport report;
    report.n = n;
    report.m = m;
    report.rank = rank;
    const BivariateHighestWeight hw(n, m, rank);
    for (const auto& [w, k] : enumerate_dominant_weights(n + 1, m - 1, rank)) {
        const Int lhs =
            mult_tensor(n, m, rank, w, counter) + mult_tensor(n, m - 2, rank, w, counter);
        const Int rhs = mult_tensor(n + 1, m - 1, rank, w, counter) + mult_irrep(hw, w, counter) +
                        mult_tensor(n - 1, m - 1, rank, w, counter);
        ++report.weights_checked;
        if (lhs != rhs) report.violations.push_back({w, lhs, rhs});
    }
    return report;
}

}  // namespace sympweight
