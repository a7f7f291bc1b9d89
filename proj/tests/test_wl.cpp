#include <catch2/catch_amalgamated.hpp>

#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"
#include "specwl/wl.hpp"

using namespace specwl;

TEST_CASE("color refinement basics") {
    // degree sequences already separate the section-3 pair
    CHECK_FALSE(wl_equivalent(disjoint_union(cycle(4), complete(1)), complete_bipartite(1, 4), 1));

    // any regular graph collapses to a single class
    for (const Graph& g : {cycle(7), complete(5), paley(13)})
        CHECK(wl1_stable(g).class_count() == 1);

    Coloring p3 = wl1_stable(path(3));
    CHECK(p3.class_count() == 2);
    CHECK(p3.colors[0] == p3.colors[2]);
    CHECK(p3.colors[0] != p3.colors[1]);
}

TEST_CASE("refinement is monotone and halts at a fixpoint") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8));
        Coloring c = wl1_stable(g);
        for (std::size_t i = 1; i < c.round_class_counts.size(); ++i)
            CHECK(c.round_class_counts[i] >= c.round_class_counts[i - 1]);
        CHECK(c.rounds + 1 == static_cast<int>(c.round_class_counts.size()));
    }
}

TEST_CASE("2-WL atomic types separate diagonal from off-diagonal") {
    Coloring c = wlk_stable(cycle(6), 2);
    int diag_color = c.colors[0 * 6 + 0];
    for (int v = 0; v < 6; ++v) CHECK(c.colors[v * 6 + v] == diag_color);
    for (int v = 0; v < 6; ++v)
        for (int u = 0; u < 6; ++u)
            if (v != u) CHECK(c.colors[v * 6 + u] != diag_color);
}

TEST_CASE("2-WL on paley(13) stabilizes at three classes") {
    Coloring c = wlk_stable(paley(13), 2);
    CHECK(c.class_count() == 3);
}

TEST_CASE("wl dimension and budget validation") {
    CHECK_THROWS_AS(wlk_stable(cycle(4), 1), input_error);
    CHECK_THROWS_AS(wlk_stable(complete(30), 2, 100), resource_error);
    CHECK_THROWS_AS(c_equivalent(cycle(4), cycle(4), 1), input_error);
}

TEST_CASE("isomorphic graphs are k-WL equivalent") {
    std::mt19937_64 rng(37);
    for (int k = 1; k <= 3; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5));
            Graph h = random_permutation_of(rng, g);
            CHECK(wl_equivalent(g, h, k));
        }
    }
}

TEST_CASE("shrikhande vs rook: 2-WL blind, same stable histograms") {
    CHECK(wl_equivalent(shrikhande(), rook_4x4(), 2));
    CHECK(c_equivalent(shrikhande(), rook_4x4(), 3));
}

TEST_CASE("K_{3,3} vs prism: color refinement blind, 2-WL sighted") {
    Graph k33 = complete_bipartite(3, 3);
    Graph prism = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                 {0, 3}, {1, 4}, {2, 5}});
    CHECK(wl_equivalent(k33, prism, 1));       // both cubic on six vertices
    CHECK_FALSE(wl_equivalent(k33, prism, 2)); // 2-WL separates them
    CHECK(c_equivalent(k33, prism, 2));
    CHECK_FALSE(c_equivalent(k33, prism, 3));
}

TEST_CASE("2-WL equivalence refines color-refinement equivalence") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 4));
        Graph h = random_graph(rng, g.n());
        if (wl_equivalent(g, h, 2)) CHECK(wl_equivalent(g, h, 1));
    }
}

TEST_CASE("colorings are deterministic") {
    Graph g = paley(13);
    Coloring a = wlk_stable(g, 2);
    Coloring b = wlk_stable(g, 2);
    CHECK(a.colors == b.colors);
    CHECK(a.rounds == b.rounds);
    CHECK(a.histogram == b.histogram);

    Coloring a1 = wl1_stable(g);
    Coloring b1 = wl1_stable(g);
    CHECK(a1.colors == b1.colors);
}

TEST_CASE("vertex-transitive graphs keep the diagonal in one class") {
    for (const Graph& g : {cycle(6), complete(4), paley(13), shrikhande()}) {
        Coloring c = wlk_stable(g, 2);
        int diag = c.colors[0];
        for (int v = 0; v < g.n(); ++v) CHECK(c.colors[static_cast<std::size_t>(v) * g.n() + v] == diag);
    }
}
