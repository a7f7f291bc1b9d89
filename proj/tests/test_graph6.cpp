#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/graph6.hpp"
#include "specwl/randgraph.hpp"

using namespace specwl;

TEST_CASE("graph6 decodes hand-checked strings") {
    // "A_": 2 vertices, single bit set -> K2.
    Graph k2 = parse_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.adjacent(0, 1));

    // "D?{": 5 vertices, bits 0000001111 -> star with center 4.
    Graph star = parse_graph6("D?{");
    CHECK(star.n() == 5);
    CHECK(degree_sequence(star) == std::vector<int>{4, 1, 1, 1, 1});

    CHECK(parse_graph6("?").n() == 0);
    CHECK(parse_graph6("@").n() == 1);
}

TEST_CASE("graph6 write round-trips") {
    CHECK(write_graph6(parse_graph6("D?{")) == "D?{");
    // the star's canonical labeling puts the center last
    CHECK(canonical_graph6(complete_bipartite(1, 4)) == "D?{");
    CHECK(isomorphic(parse_graph6("D?{"), complete_bipartite(1, 4)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 80));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    // Multi-byte size header path.
    Graph big = cycle(100);
    CHECK(parse_graph6(write_graph6(big)) == big);
}

TEST_CASE("graph6 round-trip is the identity on the full census up to n=7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("D?"), parse_error);    // truncated body
    CHECK_THROWS_AS(parse_graph6("D?{?"), parse_error);  // trailing data
    CHECK_THROWS_AS(parse_graph6("D\x1f{"), parse_error);  // byte below offset range

    try {
        parse_graph6("D?");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("graph6 rejects nonzero padding") {
    // K2's encoding with a padding bit forced on.
    std::string bad = "A";
    bad += static_cast<char>(63 + 0b110000);  // valid bit + nonzero pad
    CHECK_THROWS_AS(parse_graph6(bad), parse_error);
}

TEST_CASE("edge list format") {
    std::istringstream in("5\n0 1\n1 2\n# comment\n2 3\n3 0\n");
    Graph g = parse_edge_list(in);
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(degree_sequence(g) == std::vector<int>{2, 2, 2, 2, 0});

    std::istringstream round(write_edge_list(g));
    CHECK(parse_edge_list(round) == g);

    std::istringstream bad("3\n0\n");
    CHECK_THROWS_AS(parse_edge_list(bad), input_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_edge_list(empty), input_error);
}
