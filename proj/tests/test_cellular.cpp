#include <catch2/catch_amalgamated.hpp>

#include "specwl/cellular.hpp"
#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"

using namespace specwl;

TEST_CASE("paley(13) has the three-class basis") {
    CoherentConfig cfg = coherent_config(paley(13));
    REQUIRE(cfg.num_classes == 3);
    int diag = -1, adj = -1, rest = -1;
    for (int c = 0; c < 3; ++c) {
        if (cfg.diagonal[c]) diag = c;
        else if (cfg.in_adjacency[c]) adj = c;
        else rest = c;
    }
    REQUIRE(diag >= 0);
    REQUIRE(adj >= 0);
    REQUIRE(rest >= 0);
    CHECK(cfg.class_size[diag] == 13);
    CHECK(cfg.class_size[adj] == 2 * 39);
    CHECK(cfg.class_size[rest] == 13 * 13 - 13 - 78);
    // symmetric classes are self-paired under transpose
    for (int c = 0; c < 3; ++c) CHECK(cfg.transpose_of[c] == c);
}

TEST_CASE("complete graphs have the two-class configuration") {
    for (int n : {2, 3, 5}) {
        CoherentConfig cfg = coherent_config(complete(n));
        CHECK(cfg.num_classes == 2);
    }
}

TEST_CASE("path3 configuration partitions V x V") {
    CoherentConfig cfg = coherent_config(path(3));
    std::size_t total = 0;
    for (std::size_t s : cfg.class_size) total += s;
    CHECK(total == 9);
    // end-end pairs and middle pairs live in different classes
    CHECK(cfg.at(0, 0) == cfg.at(2, 2));
    CHECK(cfg.at(0, 0) != cfg.at(1, 1));
}

TEST_CASE("structure constants on K3") {
    CoherentConfig cfg = coherent_config(complete(3));
    StructureConstants sc = structure_constants(cfg);
    int offdiag = cfg.diagonal[0] ? 1 : 0;
    // common neighbours of an adjacent pair in K3
    CHECK(sc.at(offdiag, offdiag, offdiag) == 1);
}

TEST_CASE("structure constants recover the srg parameters of paley(13)") {
    CoherentConfig cfg = coherent_config(paley(13));
    StructureConstants sc = structure_constants(cfg);
    int adj = -1, non = -1;
    for (int c = 0; c < 3; ++c) {
        if (cfg.diagonal[c]) continue;
        (cfg.in_adjacency[c] ? adj : non) = c;
    }
    auto params = srg_params(paley(13));
    CHECK(sc.at(adj, adj, adj) == params->lambda);
    CHECK(sc.at(non, adj, adj) == params->mu);
}

TEST_CASE("diagonal classes act as identities in composition") {
    for (const Graph& g : {path(3), cycle(5), complete_bipartite(2, 3), paley(13)}) {
        CoherentConfig cfg = coherent_config(g);
        StructureConstants sc = structure_constants(cfg);
        // right-end diagonal class of each class k (constant by stability)
        std::vector<int> right_diag(cfg.num_classes, -1);
        for (int v = 0; v < cfg.n; ++v)
            for (int u = 0; u < cfg.n; ++u) right_diag[cfg.at(v, u)] = cfg.at(u, u);
        for (int k = 0; k < cfg.num_classes; ++k)
            for (int i = 0; i < cfg.num_classes; ++i)
                for (int d = 0; d < cfg.num_classes; ++d) {
                    if (!cfg.diagonal[d]) continue;
                    long expect = (i == k && right_diag[k] == d) ? 1 : 0;
                    CHECK(sc.at(k, i, d) == expect);
                }
    }
}

TEST_CASE("coherent configuration axioms hold across the census up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK_NOTHROW(coherent_config(g));
}

TEST_CASE("algebra isomorphism decisions") {
    CHECK(algebra_isomorphic(shrikhande(), rook_4x4()));
    CHECK_FALSE(algebra_isomorphic(disjoint_union(cycle(4), complete(1)), complete_bipartite(1, 4)));

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        CHECK(algebra_isomorphic(g, g));
        CHECK(algebra_isomorphic(g, random_permutation_of(rng, g)));
    }
}

TEST_CASE("no divergence between C3 equivalence and tensor certification") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        Graph h = random_graph(rng, g.n());
        AlgebraIsoResult res = algebra_isomorphic_detail(g, h);
        CHECK_FALSE(res.divergence);
    }
}

TEST_CASE("srg cellular check") {
    CHECK(srg_cellular_check(paley(13)));
    CHECK(srg_cellular_check(shrikhande()));
    CHECK(srg_cellular_check(rook_4x4()));
    CHECK_THROWS_AS(srg_cellular_check(cycle(6)), input_error);
}

TEST_CASE("Schur product of two basis matrices has disjoint support") {
    // classes partition V x V, so distinct indicator matrices never overlap
    CoherentConfig cfg = coherent_config(cycle(5));
    for (int v = 0; v < cfg.n; ++v)
        for (int u = 0; u < cfg.n; ++u) {
            int c = cfg.at(v, u);
            for (int other = 0; other < cfg.num_classes; ++other)
                if (other != c) CHECK(cfg.at(v, u) != other);
        }
}
