#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "specwl/graph.hpp"

namespace specwl {

/// Uniform random graph: each of the C(n,2) edges present with probability 1/2.
inline Graph random_graph(std::mt19937_64& rng, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() & 1) g.add_edge(u, v);
    return g;
}

/// A uniformly random relabeling of g.
inline Graph random_permutation_of(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace specwl
