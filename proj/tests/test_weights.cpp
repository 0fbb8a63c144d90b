#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sympweight/weights.hpp"

using namespace sympweight;

namespace {

// Every distinct signed-permutation image of a weight, by direct expansion.
std::set<Weight> signed_orbit(const Weight& w) {
    Weight sorted = w;
    std::sort(sorted.begin(), sorted.end());
    std::set<Weight> orbit;
    do {
        const std::size_t r = sorted.size();
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            Weight image = sorted;
            for (std::size_t i = 0; i < r; ++i)
                if (mask & (1u << i)) image[i] = -image[i];
            orbit.insert(image);
        }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return orbit;
}

}  // namespace

TEST_CASE("dominant_rep sorts absolute values") {
    CHECK(dominant_rep({0, -3, 2}) == Weight{3, 2, 0});
    CHECK(dominant_rep({1, 1}) == Weight{1, 1});
    CHECK(dominant_rep({-1, 0, 0}) == Weight{1, 0, 0});
}

TEST_CASE("dominant_rep is idempotent and dominant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Weight w(4);
        for (auto& x : w) x = entry(rng);
        const Weight d = dominant_rep(w);
        CHECK(is_dominant(d));
        CHECK(dominant_rep(d) == d);
    }
}

TEST_CASE("layer_index") {
    CHECK(layer_index({3, 2}, 3, 2) == 0);
    CHECK_FALSE(layer_index({1, 0}, 1, 1).has_value());
    CHECK(layer_index({0, 0}, 1, 1) == 1);
    CHECK_FALSE(layer_index({5, 0}, 2, 1).has_value());
}

TEST_CASE("layer_index is Weyl invariant") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Weight w(3);
        for (auto& x : w) x = entry(rng);
        CHECK(layer_index(dominant_rep(w), 5, 3) == layer_index(w, 5, 3));
    }
}

TEST_CASE("orbit_size counts distinct signed permutations") {
    CHECK(orbit_size({0, 0}) == 1);
    CHECK(orbit_size({1, 0}) == 4);
    CHECK(orbit_size({2, 1}) == 8);
    CHECK_THROWS_AS(orbit_size({1, 2}), std::invalid_argument);

    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> entry(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Weight w(4);
        for (auto& x : w) x = entry(rng);
        const Weight d = dominant_rep(w);
        CHECK(orbit_size(d) == Int(signed_orbit(d).size()));
    }
}

TEST_CASE("enumerate_dominant_weights") {
    using Entry = std::pair<Weight, long long>;
    const std::vector<Entry> expected11 = {{{2, 0}, 0}, {{1, 1}, 0}, {{0, 0}, 1}};
    CHECK(enumerate_dominant_weights(1, 0, 2) == std::vector<Entry>{{{1, 0}, 0}});
    CHECK(enumerate_dominant_weights(1, 1, 2) == expected11);
    CHECK(enumerate_dominant_weights(2, 0, 2) == expected11);
}

TEST_CASE("expanding dominant weights by orbits covers the lattice shells") {
    const long long n = 3, m = 2;
    const int rank = 3;
    std::set<Weight> covered;
    Int covered_count = 0;
    for (const auto& [w, k] : enumerate_dominant_weights(n, m, rank)) {
        const auto orbit = signed_orbit(w);
        CHECK(Int(orbit.size()) == orbit_size(w));
        for (const auto& img : orbit) {
            CHECK(covered.insert(img).second);  // orbits are disjoint
            ++covered_count;
        }
    }
    // Exactly the integer points with |x|_1 = n + m - 2k for some k.
    Int shell_count = 0;
    for (long long x1 = -(n + m); x1 <= n + m; ++x1)
        for (long long x2 = -(n + m); x2 <= n + m; ++x2)
            for (long long x3 = -(n + m); x3 <= n + m; ++x3) {
                const long long s = std::llabs(x1) + std::llabs(x2) + std::llabs(x3);
                if (s <= n + m && (n + m - s) % 2 == 0) {
                    ++shell_count;
                    CHECK(covered.count({x1, x2, x3}) == 1);
                }
            }
    CHECK(covered_count == shell_count);
}
