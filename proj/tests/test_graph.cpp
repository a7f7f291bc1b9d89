#include <catch2/catch_amalgamated.hpp>

#include "specwl/generators.hpp"
#include "specwl/graph.hpp"
#include "specwl/randgraph.hpp"

using namespace specwl;

TEST_CASE("from_edges builds the requested graph") {
    Graph p3 = from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));

    Graph empty2 = from_edges(2, {});
    CHECK(empty2.edge_count() == 0);
    CHECK_FALSE(empty2.adjacent(0, 1));

    Graph c4_iso = disjoint_union(cycle(4), Graph(1));
    CHECK(degree_sequence(c4_iso) == std::vector<int>{2, 2, 2, 2, 0});
}

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS_AS(from_edges(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(from_edges(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(from_edges(2, {{-1, 0}}), input_error);
}

TEST_CASE("degree sequence and regularity") {
    CHECK(degree_sequence(complete_bipartite(1, 4)) == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(degree_sequence(disjoint_union(cycle(4), complete(1))) ==
          std::vector<int>{2, 2, 2, 2, 0});
    CHECK(is_regular(complete(3)) == std::optional<int>(2));
    CHECK(is_regular(paley(13)) == std::optional<int>(6));
    CHECK_FALSE(is_regular(path(3)).has_value());
    CHECK_FALSE(is_regular(Graph(0)).has_value());
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        CHECK(complement(complement(g)) == g);
    }
    CHECK(complement(complete(4)).edge_count() == 0);
}

TEST_CASE("disjoint union relabels by offset") {
    Graph g = disjoint_union(cycle(4), complete(1));
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("srg parameter detection") {
    auto c5 = srg_params(cycle(5));
    REQUIRE(c5.has_value());
    CHECK(*c5 == SrgParams{5, 2, 0, 1});

    auto p13 = srg_params(paley(13));
    REQUIRE(p13.has_value());
    CHECK(*p13 == SrgParams{13, 6, 2, 3});

    auto p9 = srg_params(paley(9));
    REQUIRE(p9.has_value());
    CHECK(*p9 == SrgParams{9, 4, 1, 2});

    CHECK_FALSE(srg_params(path(3)).has_value());       // not regular
    CHECK_FALSE(srg_params(cycle(6)).has_value());      // common-neighbour counts vary
    CHECK_FALSE(srg_params(complete(4)).has_value());   // complete excluded
    CHECK_FALSE(srg_params(Graph(3)).has_value());      // edgeless excluded
}

TEST_CASE("generator outputs are symmetric and irreflexive") {
    std::vector<Graph> graphs = {cycle(5),  complete(6),     complete_bipartite(2, 3),
                                 paley(13), cubic_paley(13), shrikhande(),
                                 rook_4x4()};
    for (const Graph& g : graphs) {
        for (int v = 0; v < g.n(); ++v) {
            CHECK_FALSE(g.adjacent(v, v));
            for (int u = 0; u < g.n(); ++u) CHECK(g.adjacent(v, u) == g.adjacent(u, v));
        }
    }
}
