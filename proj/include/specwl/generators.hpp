#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/gf.hpp"
#include "specwl/graph.hpp"

namespace specwl {

inline Graph cycle(int n) {
    if (n < 3) throw input_error("cycle requires n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph edgeless(int n) { return Graph(n); }

/// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw input_error("complete_bipartite requires a,b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

namespace detail {

/// Residue graph on GF(q): i ~ j iff the field element with index i minus the
/// one with index j is a nonzero e-th power. Vertices are field elements in
/// lexicographic coefficient order, so the labelling is reproducible.
inline Graph residue_graph(long q, int e, const char* name, int modulus_condition) {
    auto pp = prime_power(q);
    if (!pp) throw input_error(std::string(name) + ": q must be a prime power, got " + std::to_string(q));
    auto [p, r] = *pp;
    if (p == 2) throw input_error(std::string(name) + ": q must be an odd prime power");
    if (q % modulus_condition != 1)
        throw input_error(std::string(name) + ": requires q = 1 (mod " +
                          std::to_string(modulus_condition) + "), got q = " + std::to_string(q));
    GaloisField field(p, r);
    std::unordered_set<long> residues;
    for (long a = 1; a < q; ++a) residues.insert(field.index(field.pow(field.element(a), e)));

    Graph g(static_cast<int>(q));
    for (long i = 0; i < q; ++i)
        for (long j = i + 1; j < q; ++j)
            if (residues.count(field.index_sub(i, j))) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

} // namespace detail

/// Paley graph P(q): vertices GF(q), adjacency by nonzero quadratic residue
/// differences. Needs q = 1 (mod 4) so that -1 is a square and the relation is
/// symmetric. Regular of degree (q-1)/2.
inline Graph paley(long q) { return detail::residue_graph(q, 2, "paley", 4); }

/// Cubic Paley graph P^3(q): adjacency by nonzero cubic residue differences.
/// Needs q = 1 (mod 3); regular of degree (q-1)/3.
inline Graph cubic_paley(long q) { return detail::residue_graph(q, 3, "cubic_paley", 3); }

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. srg(16,6,2,2), not isomorphic to rook_4x4.
inline Graph shrikhande() {
    Graph g(16);
    const int diffs[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int x = 0; x < 16; ++x) {
        int xa = x / 4, xb = x % 4;
        for (auto [da, db] : diffs) {
            int y = ((xa + da) % 4) * 4 + (xb + db) % 4;
            if (x < y) g.add_edge(x, y);
        }
    }
    return g;
}

/// 4x4 rook's graph: vertices Z4 x Z4, adjacent when they share a row or a
/// column. srg(16,6,2,2).
inline Graph rook_4x4() {
    Graph g(16);
    for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y)
            if (x / 4 == y / 4 || x % 4 == y % 4) g.add_edge(x, y);
    return g;
}

} // namespace specwl
