#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/randgraph.hpp"
#include "specwl/spectral.hpp"

using namespace specwl;

namespace {

CharPoly poly(std::vector<long> coeffs) {
    CharPoly p;
    for (long c : coeffs) p.coeffs.emplace_back(c);
    return p;
}

// Independent triangle counter for the tr(A^3) identity.
long count_triangles(const Graph& g) {
    long t = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++t;
    return t;
}

} // namespace

TEST_CASE("walk_count") {
    Graph c4 = cycle(4);
    CHECK(walk_count(c4, 0, 0, 2) == 2);
    CHECK(walk_count(c4, 0, 0, 0) == 1);
    CHECK(walk_count(c4, 0, 1, 0) == 0);
    Graph star = complete_bipartite(1, 4);  // center is vertex 0
    CHECK(walk_count(star, 0, 0, 2) == 4);
    CHECK_THROWS_AS(walk_count(c4, 0, 4, 1), input_error);
}

TEST_CASE("trace sequences of the section-3 pair") {
    Graph g = disjoint_union(cycle(4), complete(1));
    Graph h = complete_bipartite(1, 4);
    TraceSequence expect;
    expect.traces = {BigInt(0), BigInt(8), BigInt(0), BigInt(32), BigInt(0)};
    CHECK(trace_powers(g, 5) == expect);
    CHECK(trace_powers(h, 5) == expect);
    CHECK(trace_powers(Graph(4), 4).traces == std::vector<BigInt>(4, BigInt(0)));
}

TEST_CASE("trace identities") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8));
        TraceSequence t = trace_powers(g, 3);
        CHECK(t.traces[0] == 0);
        CHECK(t.traces[1] == BigInt(2) * static_cast<long>(g.edge_count()));
        CHECK(t.traces[2] == BigInt(6) * count_triangles(g));
    }
}

TEST_CASE("charpoly via Newton's identities") {
    TraceSequence k3;
    k3.traces = {BigInt(0), BigInt(6), BigInt(6)};
    CHECK(charpoly_from_traces(k3) == poly({-2, -3, 0, 1}));  // x^3 - 3x - 2

    Graph star = complete_bipartite(1, 4);
    CHECK(charpoly_from_traces(trace_powers(star, 5)) == poly({0, 0, 0, -4, 0, 1}));

    TraceSequence zeros;
    zeros.traces.assign(4, BigInt(0));
    CHECK(charpoly_from_traces(zeros) == poly({0, 0, 0, 0, 1}));  // x^4

    TraceSequence bogus;  // odd tr(A^2) cannot come from a graph
    bogus.traces = {BigInt(0), BigInt(3)};
    CHECK_THROWS_AS(charpoly_from_traces(bogus), internal_error);
}

TEST_CASE("charpoly via Faddeev-LeVerrier") {
    CHECK(charpoly_direct(complete(3)) == poly({-2, -3, 0, 1}));
    CHECK(charpoly_direct(cycle(4)) == poly({0, 0, -4, 0, 1}));  // x^4 - 4x^2
    CHECK(charpoly_direct(Graph(1)) == poly({0, 1}));            // x
    CHECK(charpoly_direct(Graph(0)) == poly({1}));
    CHECK(charpoly_direct(complete(4)) == poly({-3, -8, -6, 0, 1}));
}

TEST_CASE("the two charpoly routes agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n);
        CHECK(charpoly_from_traces(trace_powers(g, n)) == charpoly_direct(g));
    }
}

TEST_CASE("monic, trace-zero, edge-count coefficients") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n);
        CharPoly p = charpoly_direct(g);
        CHECK(p.coeffs[n] == 1);
        CHECK(p.coeffs[n - 1] == 0);
        CHECK(p.coeffs[n - 2] == -BigInt(static_cast<long>(g.edge_count())));
    }
}

TEST_CASE("cospectral") {
    Graph g = disjoint_union(cycle(4), complete(1));
    Graph h = complete_bipartite(1, 4);
    CHECK(cospectral(g, h));
    CHECK(cospectral(g, g));
    CHECK_FALSE(cospectral(paley(13), cubic_paley(13)));
    CHECK_FALSE(cospectral(complete(3), complete(4)));  // different orders

    // isomorphic graphs are co-spectral
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Graph a = random_graph(rng, 3 + static_cast<int>(rng() % 6));
        CHECK(cospectral(a, random_permutation_of(rng, a)));
    }
}

TEST_CASE("regular graphs of distinct degrees are never co-spectral") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Graph> regulars;
        for (const Graph& g : enumerate_graphs(n))
            if (is_regular(g)) regulars.push_back(g);
        for (std::size_t i = 0; i < regulars.size(); ++i)
            for (std::size_t j = i + 1; j < regulars.size(); ++j)
                if (*is_regular(regulars[i]) != *is_regular(regulars[j]))
                    CHECK_FALSE(cospectral(regulars[i], regulars[j]));
    }
}

TEST_CASE("float spectrum for display") {
    FloatSpectrum star = spectrum_float(complete_bipartite(1, 4));
    std::vector<double> expect = {2, 0, 0, 0, -2};
    REQUIRE(star.eigenvalues.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(star.eigenvalues[i] - expect[i]) < 1e-9);

    FloatSpectrum k4 = spectrum_float(complete(4));
    std::vector<double> expect4 = {3, -1, -1, -1};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(k4.eigenvalues[i] - expect4[i]) < 1e-9);

    FloatSpectrum empty = spectrum_float(Graph(3));
    for (double e : empty.eigenvalues) CHECK(e == 0.0);

    // trace-zero sanity on random graphs
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10));
        double sum = 0;
        for (double e : spectrum_float(g).eigenvalues) sum += e;
        CHECK(std::abs(sum) < 1e-9 * g.n());
    }
}

TEST_CASE("regular eigenvalue bounds") {
    CHECK(regular_eigen_bounds_check(cycle(5)));
    CHECK(regular_eigen_bounds_check(complete(4)));
    CHECK(regular_eigen_bounds_check(paley(13)));
    CHECK_THROWS_AS(regular_eigen_bounds_check(complete_bipartite(1, 4)), input_error);

    // the degree is also the largest float eigenvalue
    for (const Graph& g : {cycle(6), complete(5), paley(13)}) {
        FloatSpectrum s = spectrum_float(g);
        CHECK(std::abs(s.eigenvalues.front() - *is_regular(g)) < 1e-9);
    }
}

TEST_CASE("charpoly pretty printer") {
    CHECK(to_string(charpoly_direct(complete_bipartite(1, 4))) == "x^5 - 4*x^3");
    CHECK(to_string(charpoly_direct(complete(3))) == "x^3 - 3*x - 2");
    CHECK(to_string(charpoly_direct(Graph(0))) == "1");
}
