#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/graph.hpp"

namespace specwl {

/// Stable refinement result for one graph. Color ids are canonical: each round
/// assigns dense ids in sorted signature order, so identical inputs always
/// produce identical colorings, and colorings from a shared-palette run are
/// directly comparable across graphs.
struct Coloring {
    int dimension = 1;
    std::vector<int> colors;  // n^k entries; tuple (v_0..v_{k-1}) at row-major index
    int rounds = 0;           // refinement passes that strictly refined
    std::map<int, std::size_t> histogram;  // color id -> class size
    std::vector<std::size_t> round_class_counts;  // class count after 0,1,..,rounds passes

    std::size_t class_count() const { return histogram.size(); }
};

namespace detail {

inline void fill_histogram(Coloring& c) {
    c.histogram.clear();
    for (int color : c.colors) ++c.histogram[color];
}

inline std::size_t distinct_count(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

/// True iff the new labels induce the same partition as the old ones. New
/// labels always refine old ones here, so it suffices that no old class split.
inline bool same_partition(const std::vector<std::vector<int>>& old_colors,
                           const std::vector<std::vector<int>>& new_colors) {
    std::map<int, int> old_to_new;
    for (std::size_t gi = 0; gi < old_colors.size(); ++gi) {
        for (std::size_t t = 0; t < old_colors[gi].size(); ++t) {
            auto [it, inserted] = old_to_new.emplace(old_colors[gi][t], new_colors[gi][t]);
            if (!inserted && it->second != new_colors[gi][t]) return false;
        }
    }
    return true;
}

/// Packed atomic type of a k-tuple: equality pattern and adjacency pattern
/// over position pairs. Invariant under isomorphism, comparable across graphs.
inline std::uint64_t atomic_type(const Graph& g, const std::vector<int>& tuple) {
    std::uint64_t bits = 0;
    const int k = static_cast<int>(tuple.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bits = (bits << 1) | (tuple[i] == tuple[j] ? 1u : 0u);
            bits = (bits << 1) | (g.adjacent(tuple[i], tuple[j]) ? 1u : 0u);
        }
    return bits;
}

/// Color refinement (1-WL) on several graphs at once with one shared palette.
/// Initial color is the degree; each round relabels a vertex by (old color,
/// multiset of neighbour colors). Halts when the partition stops changing.
inline std::vector<Coloring> refine1_shared(const std::vector<const Graph*>& graphs) {
    const std::size_t gcount = graphs.size();
    std::vector<std::vector<int>> colors(gcount);

    {  // shared initial palette: sorted distinct degrees
        std::vector<int> degrees;
        for (const Graph* g : graphs)
            for (int v = 0; v < g->n(); ++v) degrees.push_back(g->degree(v));
        std::vector<int> palette = degrees;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            const Graph* g = graphs[gi];
            colors[gi].resize(g->n());
            for (int v = 0; v < g->n(); ++v)
                colors[gi][v] = static_cast<int>(
                    std::lower_bound(palette.begin(), palette.end(), g->degree(v)) - palette.begin());
        }
    }

    int rounds = 0;
    std::vector<std::vector<std::size_t>> count_trace(gcount);
    for (std::size_t gi = 0; gi < gcount; ++gi)
        count_trace[gi].push_back(distinct_count(colors[gi]));
    while (true) {
        using Signature = std::vector<int>;  // [old color, sorted neighbour colors...]
        std::vector<std::vector<Signature>> sigs(gcount);
        std::vector<Signature> pool;
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            const Graph* g = graphs[gi];
            sigs[gi].resize(g->n());
            for (int v = 0; v < g->n(); ++v) {
                Signature s;
                s.reserve(static_cast<std::size_t>(g->degree(v)) + 1);
                s.push_back(colors[gi][v]);
                for (int u = 0; u < g->n(); ++u)
                    if (g->adjacent(v, u)) s.push_back(colors[gi][u]);
                std::sort(s.begin() + 1, s.end());
                sigs[gi][v] = std::move(s);
                pool.push_back(sigs[gi][v]);
            }
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        std::vector<std::vector<int>> next(gcount);
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            next[gi].resize(graphs[gi]->n());
            for (int v = 0; v < graphs[gi]->n(); ++v)
                next[gi][v] = static_cast<int>(
                    std::lower_bound(pool.begin(), pool.end(), sigs[gi][v]) - pool.begin());
        }
        if (same_partition(colors, next)) break;
        colors = std::move(next);
        ++rounds;
        for (std::size_t gi = 0; gi < gcount; ++gi)
            count_trace[gi].push_back(distinct_count(colors[gi]));
    }

    std::vector<Coloring> out(gcount);
    for (std::size_t gi = 0; gi < gcount; ++gi) {
        out[gi].dimension = 1;
        out[gi].colors = std::move(colors[gi]);
        out[gi].rounds = rounds;
        out[gi].round_class_counts = std::move(count_trace[gi]);
        fill_histogram(out[gi]);
    }
    return out;
}

/// k-WL (folklore refinement) on several graphs at once with one shared
/// palette. Tuples are labelled by atomic type, then each round a tuple's new
/// label combines its old label with the multiset, over u in V of its own
/// graph, of the k-vector of labels of the substituted tuples.
inline std::vector<Coloring> refinek_shared(const std::vector<const Graph*>& graphs, int k,
                                            std::uint64_t tuple_cap) {
    const std::size_t gcount = graphs.size();
    std::uint64_t total_tuples = 0;
    std::vector<std::uint64_t> tuples(gcount);
    std::vector<std::vector<std::uint64_t>> strides(gcount);
    for (std::size_t gi = 0; gi < gcount; ++gi) {
        const std::uint64_t n = static_cast<std::uint64_t>(graphs[gi]->n());
        std::uint64_t count = 1;
        strides[gi].resize(k);
        for (int i = k - 1; i >= 0; --i) {
            strides[gi][i] = count;
            if (n != 0 && count > tuple_cap / n)
                throw resource_error("k-WL tuple budget of " + std::to_string(tuple_cap) +
                                     " exceeded (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
            count *= n;
        }
        tuples[gi] = count;
        total_tuples += count;
        if (total_tuples > tuple_cap)
            throw resource_error("k-WL tuple budget of " + std::to_string(tuple_cap) + " exceeded");
    }

    std::vector<std::vector<int>> colors(gcount);
    {  // shared initial palette: sorted distinct atomic types
        std::vector<std::vector<std::uint64_t>> types(gcount);
        std::vector<std::uint64_t> palette;
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            const Graph* g = graphs[gi];
            types[gi].resize(tuples[gi]);
            std::vector<int> tuple(k);
            for (std::uint64_t t = 0; t < tuples[gi]; ++t) {
                std::uint64_t rest = t;
                for (int i = 0; i < k; ++i) {
                    tuple[i] = static_cast<int>(rest / strides[gi][i]);
                    rest %= strides[gi][i];
                }
                types[gi][t] = atomic_type(*g, tuple);
                palette.push_back(types[gi][t]);
            }
        }
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            colors[gi].resize(tuples[gi]);
            for (std::uint64_t t = 0; t < tuples[gi]; ++t)
                colors[gi][t] = static_cast<int>(
                    std::lower_bound(palette.begin(), palette.end(), types[gi][t]) - palette.begin());
        }
    }

    int rounds = 0;
    std::vector<std::vector<std::size_t>> count_trace(gcount);
    for (std::size_t gi = 0; gi < gcount; ++gi)
        count_trace[gi].push_back(distinct_count(colors[gi]));
    while (true) {
        // Pass 1: intern the k-vectors of substituted-tuple labels.
        std::vector<int> kvec(k);
        std::vector<std::vector<int>> kvec_pool;
        auto collect_kvecs = [&](auto&& sink) {
            for (std::size_t gi = 0; gi < gcount; ++gi) {
                const int n = graphs[gi]->n();
                for (std::uint64_t t = 0; t < tuples[gi]; ++t) {
                    for (int u = 0; u < n; ++u) {
                        for (int i = 0; i < k; ++i) {
                            int vi = static_cast<int>(t / strides[gi][i] % graphs[gi]->n());
                            std::uint64_t sub =
                                t + (static_cast<std::uint64_t>(u) - vi) * strides[gi][i];
                            kvec[i] = colors[gi][sub];
                        }
                        sink(gi, t, u);
                    }
                }
            }
        };
        collect_kvecs([&](std::size_t, std::uint64_t, int) { kvec_pool.push_back(kvec); });
        std::sort(kvec_pool.begin(), kvec_pool.end());
        kvec_pool.erase(std::unique(kvec_pool.begin(), kvec_pool.end()), kvec_pool.end());

        // Pass 2: per-tuple signature = (old label, sorted multiset of k-vector ids).
        using Signature = std::vector<int>;
        std::vector<std::vector<Signature>> sigs(gcount);
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            sigs[gi].assign(tuples[gi], Signature());
            for (std::uint64_t t = 0; t < tuples[gi]; ++t) {
                sigs[gi][t].reserve(static_cast<std::size_t>(graphs[gi]->n()) + 1);
                sigs[gi][t].push_back(colors[gi][t]);
            }
        }
        collect_kvecs([&](std::size_t gi, std::uint64_t t, int) {
            int id = static_cast<int>(
                std::lower_bound(kvec_pool.begin(), kvec_pool.end(), kvec) - kvec_pool.begin());
            sigs[gi][t].push_back(id);
        });
        std::vector<Signature> pool;
        for (std::size_t gi = 0; gi < gcount; ++gi)
            for (auto& s : sigs[gi]) {
                std::sort(s.begin() + 1, s.end());
                pool.push_back(s);
            }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        std::vector<std::vector<int>> next(gcount);
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            next[gi].resize(tuples[gi]);
            for (std::uint64_t t = 0; t < tuples[gi]; ++t)
                next[gi][t] = static_cast<int>(
                    std::lower_bound(pool.begin(), pool.end(), sigs[gi][t]) - pool.begin());
        }
        if (same_partition(colors, next)) break;
        colors = std::move(next);
        ++rounds;
        for (std::size_t gi = 0; gi < gcount; ++gi)
            count_trace[gi].push_back(distinct_count(colors[gi]));
    }

    std::vector<Coloring> out(gcount);
    for (std::size_t gi = 0; gi < gcount; ++gi) {
        out[gi].dimension = k;
        out[gi].colors = std::move(colors[gi]);
        out[gi].rounds = rounds;
        out[gi].round_class_counts = std::move(count_trace[gi]);
        fill_histogram(out[gi]);
    }
    return out;
}

inline std::vector<Coloring> refine_shared(const std::vector<const Graph*>& graphs, int k,
                                           std::uint64_t tuple_cap) {
    if (k < 1) throw input_error("WL dimension must be >= 1");
    return k == 1 ? refine1_shared(graphs) : refinek_shared(graphs, k, tuple_cap);
}

} // namespace detail

/// Stable 1-WL (color refinement) vertex coloring.
inline Coloring wl1_stable(const Graph& g) {
    return detail::refine1_shared({&g})[0];
}

/// Stable k-WL coloring of vertex k-tuples, k >= 2.
inline Coloring wlk_stable(const Graph& g, int k, std::uint64_t tuple_cap = 10'000'000) {
    if (k < 2) throw input_error("wlk_stable requires k >= 2 (use wl1_stable)");
    return detail::refinek_shared({&g}, k, tuple_cap)[0];
}

/// Joint stable colorings of two graphs under one shared palette; tuples never
/// mix across the graphs, but signatures are pooled so ids are comparable.
struct JointColoring {
    Coloring left, right;
};

inline JointColoring joint_wl_stable(const Graph& g, const Graph& h, int k,
                                     std::uint64_t tuple_cap = 10'000'000) {
    auto cs = detail::refine_shared({&g, &h}, k, tuple_cap);
    return {std::move(cs[0]), std::move(cs[1])};
}

/// k-WL equivalence: equal stable color histograms under a shared palette.
inline bool wl_equivalent(const Graph& g, const Graph& h, int k,
                          std::uint64_t tuple_cap = 10'000'000) {
    JointColoring jc = joint_wl_stable(g, h, k, tuple_cap);
    return jc.left.histogram == jc.right.histogram;
}

/// C^m-equivalence for m >= 2 via the WL correspondence: C^m equivalence
/// coincides with (m-1)-WL equivalence (with C^2 = color refinement).
inline bool c_equivalent(const Graph& g, const Graph& h, int m,
                         std::uint64_t tuple_cap = 10'000'000) {
    if (m < 2) throw input_error("c_equivalent requires m >= 2");
    return wl_equivalent(g, h, m - 1, tuple_cap);
}

} // namespace specwl
