#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specwl/errors.hpp"

namespace specwl {

/// Simple undirected graph on vertices 0..n-1. Adjacency is stored as a packed
/// symmetric bit matrix; irreflexivity and symmetry are enforced by every
/// mutator, so a constructed Graph always satisfies both. Values are cheap to
/// copy and safe to share across threads once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        n_ = n;
        stride_ = static_cast<std::size_t>((n + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) &
               1ULL;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        set_bit(u, v);
        set_bit(v, u);
    }

    int degree(int v) const {
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * stride_];
        int d = 0;
        for (std::size_t w = 0; w < stride_; ++w) d += std::popcount(row[w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    /// Edges as ordered pairs (u,v) with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
        return total / 2;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v) / 64] |=
            1ULL << (v % 64);
    }

    int n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// Degree multiset, sorted descending.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.n());
    for (int v = 0; v < g.n(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

/// The common degree if every vertex has it, nullopt otherwise (and for n=0).
inline std::optional<int> is_regular(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

inline Graph complement(const Graph& g) {
    Graph out(g.n());
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

/// Disjoint union; vertices of h are relabelled by offset g.n().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.n() + h.n());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + g.n(), v + g.n());
    return out;
}

/// Parameters (n, r, lambda, mu) of a strongly regular graph.
struct SrgParams {
    int n = 0;
    int r = 0;
    int lambda = 0;
    int mu = 0;
    bool operator==(const SrgParams&) const = default;
};

/// Strongly-regular parameter detection by full common-neighbour scan.
/// Complete and edgeless graphs return nullopt (mu would be vacuous).
inline std::optional<SrgParams> srg_params(const Graph& g) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    auto deg = is_regular(g);
    if (!deg) return std::nullopt;
    const int r = *deg;
    if (r == 0 || r == n - 1) return std::nullopt;  // edgeless / complete

    int lambda = -1, mu = -1;
    for (int v = 0; v < n; ++v) {
        for (int u = v + 1; u < n; ++u) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(v, w) && g.adjacent(u, w)) ++common;
            int& slot = g.adjacent(v, u) ? lambda : mu;
            if (slot == -1)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    // r > 0 and r < n-1 guarantee both pair kinds exist.
    if (lambda == -1 || mu == -1) return std::nullopt;
    // Standard feasibility identity; holds for any graph passing the scan.
    if (static_cast<long>(r) * (r - lambda - 1) != static_cast<long>(n - r - 1) * mu)
        throw internal_error("srg feasibility identity violated");
    return SrgParams{n, r, lambda, mu};
}

} // namespace specwl
