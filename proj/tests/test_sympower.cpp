#include <catch2/catch_amalgamated.hpp>

#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"
#include "specwl/spectral.hpp"
#include "specwl/sympower.hpp"

using namespace specwl;

TEST_CASE("subset ranking is a colex bijection") {
    SubsetIndex index(7, 3);
    CHECK(index.count() == 35);
    for (std::uint64_t r = 0; r < index.count(); ++r) {
        std::vector<int> subset = index.unrank(r);
        CHECK(std::is_sorted(subset.begin(), subset.end()));
        CHECK(index.rank(subset) == r);
    }
    // colex order: ranks are ordered by the largest differing element
    CHECK(index.unrank(0) == std::vector<int>{0, 1, 2});
    CHECK(index.unrank(1) == std::vector<int>{0, 1, 3});
    CHECK(index.unrank(34) == std::vector<int>{4, 5, 6});
}

TEST_CASE("symmetric power constructions") {
    CHECK(symmetric_power(complete(2), 1) == complete(2));
    CHECK(symmetric_power(complete(3), 2) == complete(3));
    // the symmetric square of the path 0-1-2 is again a path: {0,1}-{0,2}-{1,2}
    CHECK(symmetric_power(path(3), 2) == path(3));
    CHECK_THROWS_AS(symmetric_power(complete(3), 4), input_error);
    CHECK_THROWS_AS(symmetric_power(complete(30), 10, 1000), resource_error);
}

TEST_CASE("first power is the identity labeling") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
        CHECK(symmetric_power(g, 1) == g);
    }
}

TEST_CASE("k-walk counting basics") {
    CHECK(k_walk_count_dp(complete(3), 2, 2) == 6);
    CHECK(k_walk_count_dp(complete(3), 2, 0) == 3);  // C(3,2) empty walks
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        // 1-walks are ordinary walks
        TraceSequence t = trace_powers(g, 4);
        for (long l = 1; l <= 4; ++l) CHECK(k_walk_count_dp(g, 1, l) == t.traces[l - 1]);
        CHECK(k_walk_count_dp(g, 1, 0) == g.n());
    }
}

TEST_CASE("walk correspondence: DP equals symmetric-power traces") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n);
        for (int k = 1; k <= 3 && k <= n; ++k) {
            Graph power = symmetric_power(g, k);
            TraceSequence t = trace_powers(power, 5);
            for (long l = 1; l <= 5; ++l) CHECK(k_walk_count_dp(g, k, l) == t.traces[l - 1]);
        }
    }
}
