#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "specwl/bigmat.hpp"
#include "specwl/errors.hpp"
#include "specwl/graph.hpp"

namespace specwl {

/// Bijection between k-subsets of 0..n-1 and dense indices 0..C(n,k)-1 by
/// colexicographic rank: rank(S) = sum over the sorted elements s_0<s_1<...
/// of C(s_i, i+1). Unranking is greedy, O(k) with the binomial table.
class SubsetIndex {
public:
    SubsetIndex(int n, int k) : n_(n), k_(k) {
        if (k < 0 || k > n) throw input_error("SubsetIndex requires 0 <= k <= n");
        choose_.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
        for (int i = 0; i <= n; ++i) {
            choose_[i][0] = 1;
            for (int j = 1; j <= k && j <= i; ++j)
                choose_[i][j] = choose_[i - 1][j - 1] + (i - 1 >= j ? choose_[i - 1][j] : 0);
        }
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t count() const { return choose_[n_][k_]; }

    std::uint64_t rank(const std::vector<int>& sorted_subset) const {
        std::uint64_t r = 0;
        for (int i = 0; i < k_; ++i) r += choose_[sorted_subset[i]][i + 1];
        return r;
    }

    std::vector<int> unrank(std::uint64_t r) const {
        std::vector<int> out(k_);
        for (int i = k_ - 1; i >= 0; --i) {
            int v = i;  // smallest candidate with C(v, i+1) = 0
            for (int hi = n_ - 1; hi > i; --hi) {
                if (choose_[hi][i + 1] <= r) {
                    v = hi;
                    break;
                }
            }
            out[i] = v;
            r -= choose_[v][i + 1];
        }
        return out;
    }

private:
    int n_, k_;
    std::vector<std::vector<std::uint64_t>> choose_;
};

/// k-th symmetric power: vertices are the k-subsets of V(G) (labelled by
/// SubsetIndex rank), and two subsets are adjacent iff their symmetric
/// difference is an edge of G. symmetric_power(G,1) equals G vertex-for-vertex.
inline Graph symmetric_power(const Graph& g, int k, std::uint64_t vertex_cap = 100'000) {
    const int n = g.n();
    if (k < 1 || k > n) throw input_error("symmetric_power requires 1 <= k <= n");
    SubsetIndex index(n, k);
    if (index.count() > vertex_cap)
        throw resource_error("symmetric power vertex budget of " + std::to_string(vertex_cap) +
                             " exceeded: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    auto edges = g.edges();
    Graph out(static_cast<int>(index.count()));
    for (std::uint64_t s = 0; s < index.count(); ++s) {
        std::vector<int> subset = index.unrank(s);
        std::vector<bool> in_subset(n, false);
        for (int v : subset) in_subset[v] = true;
        for (auto [a, b] : edges) {
            if (in_subset[a] == in_subset[b]) continue;  // symmetric difference != {a,b}
            std::vector<int> other = subset;
            for (int& v : other) {
                if (v == a) v = b;
                else if (v == b) v = a;
            }
            std::sort(other.begin(), other.end());
            std::uint64_t t = index.rank(other);
            if (s < t) out.add_edge(static_cast<int>(s), static_cast<int>(t));
        }
    }
    return out;
}

/// Total number of closed k-walks of length l in G, by dynamic programming
/// over (subset bitmask, length) states with moves enumerated by toggling edge
/// endpoints. Deliberately independent of symmetric_power: subsets are hashed
/// bitmasks, not SubsetIndex ranks, and adjacency is never materialized.
inline BigInt k_walk_count_dp(const Graph& g, int k, long l, std::uint64_t vertex_cap = 100'000) {
    const int n = g.n();
    if (k < 1 || k > n) throw input_error("k_walk_count_dp requires 1 <= k <= n");
    if (l < 0) throw input_error("k_walk_count_dp: negative length");
    if (n > 63) throw resource_error("k_walk_count_dp supports n <= 63");

    // Gosper's hack enumerates all k-subsets as bitmasks in increasing order.
    std::vector<std::uint64_t> masks;
    std::unordered_map<std::uint64_t, std::size_t> id_of;
    for (std::uint64_t m = (1ULL << k) - 1; m < (1ULL << n);) {
        id_of.emplace(m, masks.size());
        masks.push_back(m);
        if (masks.size() > vertex_cap)
            throw resource_error("k-walk subset budget of " + std::to_string(vertex_cap) + " exceeded");
        std::uint64_t c = m & (~m + 1), r = m + c;
        m = r | ((m ^ r) >> 2) / c;
    }

    auto edges = g.edges();
    // moves[i] lists the subset ids reachable from masks[i] in one step.
    std::vector<std::vector<std::size_t>> moves(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (auto [a, b] : edges) {
            bool ina = (masks[i] >> a) & 1, inb = (masks[i] >> b) & 1;
            if (ina == inb) continue;
            moves[i].push_back(id_of.at(masks[i] ^ (1ULL << a) ^ (1ULL << b)));
        }
    }

    BigInt total = 0;
    std::vector<BigInt> cur(masks.size()), next(masks.size());
    for (std::size_t start = 0; start < masks.size(); ++start) {
        std::fill(cur.begin(), cur.end(), BigInt(0));
        cur[start] = 1;
        for (long step = 0; step < l; ++step) {
            std::fill(next.begin(), next.end(), BigInt(0));
            for (std::size_t i = 0; i < masks.size(); ++i) {
                if (cur[i] == 0) continue;
                for (std::size_t j : moves[i]) next[j] += cur[i];
            }
            cur.swap(next);
        }
        total += cur[start];
    }
    return total;
}

} // namespace specwl
