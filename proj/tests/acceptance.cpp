// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "sympweight/sympweight.hpp"

using namespace sympweight;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, double seconds) {
    std::printf("criterion %2d: %s  %s (%.2fs)\n", criterion, ok ? "PASS" : "FAIL", name.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void run(int criterion, const std::string& name, F&& body, double limit_seconds = 0.0) {
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("criterion %2d: exception: %s\n", criterion, e.what());
        ok = false;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && elapsed > limit_seconds) ok = false;
    report(criterion, name, ok, elapsed);
}

Int brute_bounded_count(const CapVector& caps, long long m) {
    if (m < 0) return 0;
    Int count = 0;
    auto rec = [&](auto&& self, std::size_t pos, long long remaining) -> void {
        if (pos == caps.size()) {
            if (remaining == 0) ++count;
            return;
        }
        for (long long x = 0; x <= std::min(caps[pos], remaining); ++x)
            self(self, pos + 1, remaining - x);
    };
    rec(rec, 0, m);
    return count;
}

bool tensor_oracle_equivalence() {
    for (int rank = 2; rank <= 3; ++rank)
        for (long long n = 0; n <= 8; ++n)
            for (long long m = 0; m <= n && n + m <= 8; ++m) {
                const WeightTable table = brute_tensor_weights(n, m, rank);
                for (const auto& [w, count] : table.mult)
                    if (mult_tensor(n, m, rank, w) != count) return false;
            }
    return true;
}

bool irrep_oracle_equivalence() {
    for (int rank = 2; rank <= 3; ++rank)
        for (long long n = 0; n <= 6; ++n)
            for (long long m = 0; m <= n && n + m <= 6; ++m) {
                const BivariateHighestWeight hw(n, m, rank);
                FreudenthalTable oracle(hw.as_weight(), rank);
                for (const auto& [w, k] : enumerate_dominant_weights(n, m, rank))
                    if (mult_irrep(hw, w) != oracle.multiplicity(w)) return false;
            }
    return true;
}

bool grothendieck_consistency() {
    for (int rank = 2; rank <= 4; ++rank)
        for (long long n = 0; n <= 10; ++n)
            for (long long m = 0; m <= n && n + m <= 10; ++m) {
                const BivariateHighestWeight hw(n, m, rank);
                for (const auto& [w, k] : enumerate_dominant_weights(n, m, rank))
                    if (mult_irrep(hw, w) != mult_irrep_via_virtual(hw, w)) return false;
            }
    return true;
}

bool j_plus_one_law() {
    const long long n = 5, m = 4;
    for (long long j = 0; j <= m; ++j)
        if (mult_tensor(n, m, 3, {n + m - j, j, 0}) != j + 1) return false;
    return true;
}

bool diamond_law() {
    for (int rank = 2; rank <= 4; ++rank)
        for (long long n = 0; n <= 8; ++n) {
            const WeightTable table = brute_tensor_weights(n, 0, rank);
            for (const auto& [w, count] : table.mult) {
                const auto k = layer_index(w, n, 0);
                if (!k) return false;
                if (mult_sym(n, rank, w) != binom(*k + rank - 1, rank - 1)) return false;
                if (mult_sym(n, rank, w) != count) return false;
            }
        }
    return true;
}

bool highest_weight_suite() {
    for (int rank = 2; rank <= 3; ++rank)
        for (long long n = 1; n <= 5; ++n)
            for (long long m = 1; m <= n && n + m <= 6; ++m)
                for (long long p = 0; p <= m; ++p) {
                    const FormalVector vp = highest_weight_vector(rank, n, m, p);
                    if (!is_highest_weight(vp)) return false;
                    if (!rho_star(vp).is_zero()) return false;
                }
    auto unit = [](const ExponentPair& p) {
        FormalVector v(p.rank(), p.degree_a(), p.degree_b());
        v.add_term(p, 1);
        return v;
    };
    for (long long n = 1; n <= 3; ++n)
        for (long long m = 1; m <= 3; ++m) {
            const auto source = monomial_basis(2, n - 1, m - 1);
            const auto target = monomial_basis(2, n, m);
            const auto rho_mat =
                matrix_of_map([&](const ExponentPair& p) { return rho(unit(p)); }, source, target);
            if (integer_rank(rho_mat) != source.size()) return false;
            const auto rho_star_mat = matrix_of_map(
                [&](const ExponentPair& p) { return rho_star(unit(p)); }, target, source);
            if (integer_rank(rho_star_mat) != source.size()) return false;
        }
    return true;
}

bool decomposition_sweeps() {
    for (int rank = 2; rank <= 3; ++rank)
        for (long long n = 1; n <= 7; ++n)
            for (long long m = 1; m <= n && n + m <= 8; ++m) {
                if (!check_prop2(n, m, rank).ok()) return false;
                if (m >= 2 && !check_balance(n, m, rank).ok()) return false;
            }
    return true;
}

bool dimension_consistency() {
    for (int rank = 2; rank <= 3; ++rank)
        for (long long n = 0; n <= 6; ++n)
            for (long long m = 0; m <= n && n + m <= 6; ++m) {
                const BivariateHighestWeight hw(n, m, rank);
                if (dim_irrep(hw) != weyl_dim(hw.as_weight(), rank)) return false;
            }
    std::mt19937 rng(190733);
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<long long> cap_dist(0, 10);
    for (int trial = 0; trial < 10000; ++trial) {
        CapVector caps(static_cast<std::size_t>(len_dist(rng)));
        for (auto& c : caps) c = cap_dist(rng);
        const long long total = std::accumulate(caps.begin(), caps.end(), 0LL);
        std::uniform_int_distribution<long long> m_dist(-1, total + 1);
        const long long m = m_dist(rng);
        if (bounded_count_sieve(caps, m) != bounded_count_dp(caps, m)) return false;
    }
    return true;
}

bool performance_property() {
    const BivariateHighestWeight hw(20, 15, 5);
    const Weight w{5, 4, 3, 2, 1};
    const auto t0 = Clock::now();
    const Int dp_value = mult_irrep(hw, w, Counter::dp);
    const double dp_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto t1 = Clock::now();
    const Int sieve_value = mult_irrep(hw, w, Counter::sieve);
    const double sieve_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    std::printf("    dp: %.4fs, sieve: %.4fs, value %s\n", dp_seconds, sieve_seconds,
                dp_value.str().c_str());
    return dp_value == sieve_value && dp_seconds < 1.0 && sieve_seconds > dp_seconds;
}

}  // namespace

int main() {
    run(1, "tensor oracle equivalence (r<=3, n+m<=8)", tensor_oracle_equivalence, 60.0);
    run(2, "irreducible oracle equivalence (r<=3, n+m<=6)", irrep_oracle_equivalence, 60.0);
    run(3, "Grothendieck consistency (r<=4, n+m<=10)", grothendieck_consistency);
    run(4, "j+1 law at r=3, n=5, m=4", j_plus_one_law);
    run(5, "diamond law (r<=4, n<=8)", diamond_law);
    run(6, "highest-weight vector suite + rank checks", highest_weight_suite);
    run(7, "decomposition sweeps (r<=3, n+m<=8)", decomposition_sweeps);
    run(8, "dimension consistency + counter agreement x10000", dimension_consistency);
    run(9, "dp < 1s at r=5, n=20, m=15; sieve slower", performance_property);
    run(10, "all formulas covered by property/oracle checks above",
        [] { return failures == 0; });
    return failures == 0 ? 0 : 1;
}
