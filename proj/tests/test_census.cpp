#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"

using namespace specwl;

namespace {

// Exhaustive permutation-search oracle for the pruned isomorphism test.
bool isomorphic_brute(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) return false;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v)
            for (int u = v + 1; u < g.n() && ok; ++u)
                if (g.adjacent(v, u) != h.adjacent(perm[v], perm[u])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("isomorphism test") {
    CHECK_FALSE(isomorphic(disjoint_union(cycle(4), complete(1)), complete_bipartite(1, 4)));
    CHECK_FALSE(isomorphic(shrikhande(), rook_4x4()));

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8));
        CHECK(isomorphic(g, random_permutation_of(rng, g)));
    }
    CHECK(isomorphic(shrikhande(), random_permutation_of(rng, shrikhande())));
}

TEST_CASE("pruned isomorphism agrees with exhaustive permutation search") {
    for (int n = 2; n <= 4; ++n) {
        auto graphs = enumerate_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i; j < graphs.size(); ++j)
                CHECK(isomorphic(graphs[i], graphs[j]) == isomorphic_brute(graphs[i], graphs[j]));
    }
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 5);
        Graph h = (trial % 2 == 0) ? random_permutation_of(rng, g) : random_graph(rng, 5);
        CHECK(isomorphic(g, h) == isomorphic_brute(g, h));
    }
}

TEST_CASE("census counts match the classical enumeration") {
    const std::size_t expect[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_graphs(n).size() == expect[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(9), resource_error);
}

TEST_CASE("every emitted representative is canonical") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(canonical_form(g) == g);
}

TEST_CASE("census entries are pairwise non-isomorphic at small n") {
    auto graphs = enumerate_graphs(4);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(isomorphic_brute(graphs[i], graphs[j]));
}

TEST_CASE("canonical form is isomorphism-invariant") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        CHECK(canonical_graph6(g) == canonical_graph6(random_permutation_of(rng, g)));
    }
}

TEST_CASE("worker partitioning does not change the census") {
    auto one = enumerate_graphs(6, 1);
    auto four = enumerate_graphs(6, 4);
    CHECK(one == four);
}

TEST_CASE("spectral census at n=5 finds exactly the classic pair") {
    Census census = build_census(5);
    SpectralSummary s = spectral_census(census);
    CHECK(s.graph_count == 34);
    CHECK(s.ds_count == 32);
    REQUIRE(s.cospectral_classes.size() == 1);
    std::vector<std::string> expect = {canonical_graph6(disjoint_union(cycle(4), complete(1))),
                                       canonical_graph6(complete_bipartite(1, 4))};
    std::sort(expect.begin(), expect.end());
    CHECK(s.cospectral_classes[0].members == expect);
}

TEST_CASE("2K3 is determined by its spectrum") {
    Census census = build_census(6);
    std::string key = canonical_graph6(disjoint_union(complete(3), complete(3)));
    bool found = false;
    for (const auto& e : census.entries)
        if (e.g6 == key) {
            found = true;
            CHECK(e.is_ds);
        }
    CHECK(found);
}

TEST_CASE("census build is deterministic") {
    Census a = build_census(5);
    Census b = build_census(5);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].g6 == b.entries[i].g6);
        CHECK(a.entries[i].charpoly == b.entries[i].charpoly);
    }
}

TEST_CASE("census TSV round trip") {
    Census census = build_census(4);
    std::ostringstream out;
    write_census_tsv(census, out);
    std::istringstream in(out.str());
    std::vector<Graph> reread = read_census_tsv(in);
    CHECK(reread == census.graphs);
}

TEST_CASE("cross-invariant scan regions") {
    Census c5 = build_census(5);
    ScanReport r5 = cross_invariant_scan(c5);
    CHECK(r5.pair_count == 34 * 33 / 2);
    REQUIRE(r5.cospectral_not_wl1_witness.has_value());
    CHECK_FALSE(r5.wl1_not_cospectral_witness.has_value());  // all 1-WL classes split at n=5
    CHECK(r5.region_count[1][0][0] == 1);                     // exactly the classic pair

    Census c6 = build_census(6);
    ScanReport r6 = cross_invariant_scan(c6);
    REQUIRE(r6.wl1_not_cospectral_witness.has_value());
    auto [a, b] = *r6.wl1_not_cospectral_witness;
    Graph ga = parse_graph6(a), gb = parse_graph6(b);
    CHECK(wl_equivalent(ga, gb, 1));
    CHECK_FALSE(cospectral(ga, gb));
    CHECK(r6.wl2_pairs() == 0);  // 2-WL identifies everything this small
    CHECK(r6.isomorphic_pairs == 0);
}

TEST_CASE("imported graph lists feed the census") {
    Census c4 = build_census(4);
    std::vector<Graph> imported = c4.graphs;
    Census again = build_census(4, &imported);
    CHECK(again.entries.size() == c4.entries.size());
    std::vector<Graph> wrong_order = {complete(3)};
    CHECK_THROWS_AS(build_census(4, &wrong_order), input_error);
}
