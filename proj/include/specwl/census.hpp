#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/graph.hpp"
#include "specwl/graph6.hpp"
#include "specwl/spectral.hpp"
#include "specwl/wl.hpp"

namespace specwl {

namespace detail {

// The adjacency word of an n-vertex graph is the upper triangle in graph6 bit
// order: pair (i,j), i < j, at index C(j,2) + i. Comparing words is comparing
// graph6 strings, so the minimum word over all relabelings is the canonical
// form used for census dedupe.

inline std::size_t pair_bit_index(int i, int j) {  // requires i < j
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

inline std::uint32_t adjacency_word32(const Graph& g) {
    std::uint32_t word = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j)) word |= 1u << pair_bit_index(i, j);
    return word;
}

/// Is the identity labeling of `word` lexicographically minimal over all
/// relabelings? Backtracking over partial assignments sigma(0..j); a branch
/// dies as soon as its column prefix exceeds the original, and the whole test
/// fails as soon as any branch goes below it.
class CanonicityTest {
public:
    CanonicityTest(std::uint32_t word, int n) : word_(word), n_(n) {}

    bool is_canonical() {
        sigma_.assign(n_, -1);
        used_ = 0;
        return !descend(0);
    }

private:
    bool bit(int a, int b) const {  // original adjacency, any order
        if (a > b) std::swap(a, b);
        return (word_ >> pair_bit_index(a, b)) & 1u;
    }

    // Returns true iff some extension of the current prefix is strictly
    // smaller than the original word.
    bool descend(int depth) {
        if (depth == n_) return false;  // full permutation, word equal
        for (int c = 0; c < n_; ++c) {
            if ((used_ >> c) & 1u) continue;
            int cmp = 0;  // -1 smaller, +1 larger, 0 equal so far
            for (int i = 0; i < depth; ++i) {
                bool candidate = bit(sigma_[i], c);
                bool original = (word_ >> pair_bit_index(i, depth)) & 1u;
                if (candidate != original) {
                    cmp = candidate ? 1 : -1;
                    break;
                }
            }
            if (cmp < 0) return true;
            if (cmp > 0) continue;
            sigma_[depth] = c;
            used_ |= 1u << c;
            bool smaller = descend(depth + 1);
            used_ &= ~(1u << c);
            if (smaller) return true;
        }
        return false;
    }

    std::uint32_t word_;
    int n_;
    std::vector<int> sigma_;
    std::uint32_t used_ = 0;
};

inline Graph graph_from_word32(std::uint32_t word, int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((word >> pair_bit_index(i, j)) & 1u) g.add_edge(i, j);
    return g;
}

} // namespace detail

/// The lexicographically minimal adjacency word over all relabelings, as a
/// Graph. Branch-and-bound; practical up to n around 10.
inline Graph canonical_form(const Graph& g) {
    const int n = g.n();
    std::vector<bool> best;  // bits of the best word found, graph6 order
    best.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) best.push_back(g.adjacent(i, j));

    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    std::vector<bool> current(best.size());

    auto rec = [&](auto&& self, int depth, bool tied) -> void {
        if (depth == n) {
            // `tied` tracks equality against the best seen when this branch
            // started; best may have improved below us, so compare explicitly.
            if (!tied && current < best) best = current;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            int cmp = tied ? 0 : -1;
            std::size_t base = detail::pair_bit_index(0, depth);
            for (int i = 0; i < depth; ++i) {
                int a = sigma[i] < c ? sigma[i] : c, b = sigma[i] < c ? c : sigma[i];
                bool candidate = g.adjacent(a, b);
                current[base + i] = candidate;
                if (cmp == 0 && candidate != best[base + i]) cmp = candidate ? 1 : -1;
            }
            if (cmp > 0) continue;
            sigma[depth] = c;
            used[c] = true;
            self(self, depth + 1, cmp == 0);
            used[c] = false;
        }
    };
    rec(rec, 0, true);

    Graph out(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (best[detail::pair_bit_index(i, j)]) out.add_edge(i, j);
    return out;
}

inline std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_form(g)); }

/// Exact isomorphism test: quick rejection by joint color refinement, then
/// backtracking over color-respecting vertex bijections.
inline bool isomorphic(const Graph& g, const Graph& h) {
    const int n = g.n();
    if (n != h.n()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if (n == 0) return true;

    JointColoring jc = joint_wl_stable(g, h, 1);
    if (jc.left.histogram != jc.right.histogram) return false;

    // Map vertices of g in order of ascending color class size; each vertex
    // may only map to an h-vertex of the same stable color.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::make_pair(jc.left.histogram.at(jc.left.colors[a]), jc.left.colors[a]);
        auto kb = std::make_pair(jc.left.histogram.at(jc.left.colors[b]), jc.left.colors[b]);
        if (ka != kb) return ka < kb;
        return a < b;
    });

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || jc.right.colors[w] != jc.left.colors[v]) continue;
            bool ok = true;
            for (int i = 0; i < depth; ++i) {
                int prev = order[i];
                if (g.adjacent(v, prev) != h.adjacent(w, image[prev])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (self(self, depth + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// All graphs on n vertices up to isomorphism, one canonical representative
/// per class, ordered by adjacency word. Built-in scan covers n <= census_n_cap
/// (default 7, 2^21 candidate matrices); larger orders must be imported from
/// graph6 files produced by an external enumerator.
inline std::vector<Graph> enumerate_graphs(int n, int workers = 1, int census_n_cap = 7) {
    if (n < 1) throw input_error("enumerate_graphs requires n >= 1");
    if (n > census_n_cap)
        throw resource_error("built-in enumeration is capped at n = " +
                             std::to_string(census_n_cap) +
                             "; import a graph6 file for larger orders");
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = 1ULL << bits;
    workers = std::max(1, std::min<int>(workers, 64));

    // Partition the word space into contiguous ranges; each worker emits
    // canonical words in increasing order, so concatenation is sorted.
    std::vector<std::vector<std::uint32_t>> found(workers);
    auto scan = [&](int wi) {
        std::uint64_t lo = total * wi / workers, hi = total * (wi + 1) / workers;
        for (std::uint64_t word = lo; word < hi; ++word) {
            detail::CanonicityTest test(static_cast<std::uint32_t>(word), n);
            if (test.is_canonical()) found[wi].push_back(static_cast<std::uint32_t>(word));
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(scan, wi);
        for (auto& t : pool) t.join();
    }

    std::vector<Graph> out;
    for (const auto& part : found)
        for (std::uint32_t word : part) out.push_back(detail::graph_from_word32(word, n));
    return out;
}

inline std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

/// One census row: the canonical graph plus the invariants the scans need.
struct CensusEntry {
    std::string g6;
    CharPoly charpoly;
    std::vector<std::size_t> wl1_class_sizes;  // sorted ascending, display only
    std::optional<int> regular_degree;
    std::optional<SrgParams> srg;
    bool is_ds = false;
};

struct Census {
    int n = 0;
    std::vector<Graph> graphs;
    std::vector<CensusEntry> entries;
};

/// Builds the census for an order: enumerate (or take imported graphs),
/// compute per-graph invariants, then decide DS by grouping characteristic
/// polynomials within the order (co-spectral mates always share the order, so
/// per-n grouping is complete).
inline Census build_census(int n, const std::vector<Graph>* imported = nullptr, int workers = 1,
                           int census_n_cap = 7) {
    Census census;
    census.n = n;
    census.graphs = imported ? *imported : enumerate_graphs(n, workers, census_n_cap);
    for (const Graph& g : census.graphs) {
        if (g.n() != n) throw input_error("imported graph has wrong order");
        CensusEntry e;
        e.g6 = write_graph6(g);
        e.charpoly = charpoly_direct(g);
        Coloring c = wl1_stable(g);
        for (const auto& [color, size] : c.histogram) e.wl1_class_sizes.push_back(size);
        std::sort(e.wl1_class_sizes.begin(), e.wl1_class_sizes.end());
        e.regular_degree = is_regular(g);
        e.srg = srg_params(g);
        census.entries.push_back(std::move(e));
    }
    std::map<std::vector<BigInt>, std::size_t> class_sizes;
    for (const auto& e : census.entries) ++class_sizes[e.charpoly.coeffs];
    for (auto& e : census.entries) e.is_ds = class_sizes.at(e.charpoly.coeffs) == 1;
    return census;
}

// --- persistence: one line per graph, "g6 TAB charpoly TAB flags" -----------

inline std::string census_line(const CensusEntry& e) {
    std::ostringstream out;
    out << e.g6 << "\t";
    for (std::size_t i = 0; i < e.charpoly.coeffs.size(); ++i) {
        if (i) out << ",";
        out << e.charpoly.coeffs[i].get_str();
    }
    out << "\t";
    out << "regular=" << (e.regular_degree ? std::to_string(*e.regular_degree) : "-");
    out << ";srg=";
    if (e.srg)
        out << e.srg->n << "," << e.srg->r << "," << e.srg->lambda << "," << e.srg->mu;
    else
        out << "-";
    out << ";ds=" << (e.is_ds ? 1 : 0);
    out << ";wl1=";
    for (std::size_t i = 0; i < e.wl1_class_sizes.size(); ++i) {
        if (i) out << "+";
        out << e.wl1_class_sizes[i];
    }
    return out.str();
}

inline void write_census_tsv(const Census& census, std::ostream& out) {
    for (const auto& e : census.entries) out << census_line(e) << "\n";
}

/// Reads back the graph6 column of a census TSV (the invariants are cheap to
/// recompute; the graph list is what downstream scans need).
inline std::vector<Graph> read_census_tsv(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        out.push_back(parse_graph6(tab == std::string::npos ? line : line.substr(0, tab)));
    }
    return out;
}

// --- spectral census ---------------------------------------------------------

struct SpectralClass {
    std::vector<BigInt> charpoly;
    std::vector<std::string> members;  // canonical graph6 strings
};

struct SpectralSummary {
    int n = 0;
    std::size_t graph_count = 0;
    std::size_t ds_count = 0;
    std::size_t class_count = 0;
    std::vector<SpectralClass> cospectral_classes;  // only classes of size >= 2
};

inline SpectralSummary spectral_census(const Census& census) {
    SpectralSummary s;
    s.n = census.n;
    s.graph_count = census.entries.size();
    std::map<std::vector<BigInt>, std::vector<std::string>> groups;
    for (const auto& e : census.entries) groups[e.charpoly.coeffs].push_back(e.g6);
    s.class_count = groups.size();
    for (auto& [coeffs, members] : groups) {
        if (members.size() == 1) {
            ++s.ds_count;
            continue;
        }
        std::sort(members.begin(), members.end());
        s.cospectral_classes.push_back({coeffs, std::move(members)});
    }
    return s;
}

// --- cross-invariant scan ----------------------------------------------------

/// Pairwise relation counts over one census: for every unordered pair the
/// booleans (cospectral, C^2-equivalent i.e. 1-WL, 2-WL-equivalent). The
/// region counters index the eight combinations. Hard theorems are asserted:
/// 2-WL equivalence implies co-spectrality, and no two distinct census entries
/// are isomorphic. Witnesses for the incomparability regions are recorded.
struct ScanReport {
    int n = 0;
    std::size_t graph_count = 0;
    std::size_t pair_count = 0;
    // region_count[cospectral][wl1][wl2]
    std::size_t region_count[2][2][2] = {};
    std::size_t isomorphic_pairs = 0;  // must stay 0
    std::optional<std::pair<std::string, std::string>> cospectral_not_wl1_witness;
    std::optional<std::pair<std::string, std::string>> wl1_not_cospectral_witness;
    std::vector<int> wl1_bucket;      // per graph: 1-WL equivalence class id
    std::vector<int> charpoly_bucket; // per graph: characteristic polynomial id

    std::size_t cospectral_pairs() const {
        return region_count[1][0][0] + region_count[1][0][1] + region_count[1][1][0] +
               region_count[1][1][1];
    }
    std::size_t wl1_pairs() const {
        return region_count[0][1][0] + region_count[0][1][1] + region_count[1][1][0] +
               region_count[1][1][1];
    }
    std::size_t wl2_pairs() const {
        return region_count[0][0][1] + region_count[0][1][1] + region_count[1][0][1] +
               region_count[1][1][1];
    }
};

inline ScanReport cross_invariant_scan(const Census& census, std::uint64_t tuple_cap = 10'000'000) {
    ScanReport report;
    report.n = census.n;
    const std::size_t count = census.graphs.size();
    report.graph_count = count;

    // Shared-palette refinement over the whole census makes stable colorings
    // comparable across graphs: two graphs are 1-WL equivalent iff their
    // sorted stable color vectors agree.
    std::vector<const Graph*> all;
    for (const auto& g : census.graphs) all.push_back(&g);
    std::vector<int>& wl1_key = report.wl1_bucket;
    wl1_key.resize(count);
    {
        auto colorings = detail::refine1_shared(all);
        std::map<std::vector<int>, int> key_ids;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<int> key = colorings[i].colors;
            std::sort(key.begin(), key.end());
            wl1_key[i] = static_cast<int>(key_ids.emplace(std::move(key), key_ids.size()).first->second);
        }
    }
    std::vector<int>& cp_key = report.charpoly_bucket;
    cp_key.resize(count);
    {
        std::map<std::vector<BigInt>, int> key_ids;
        for (std::size_t i = 0; i < count; ++i)
            cp_key[i] = static_cast<int>(
                key_ids.emplace(census.entries[i].charpoly.coeffs, key_ids.size()).first->second);
    }

    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            ++report.pair_count;
            bool cospec = cp_key[i] == cp_key[j];
            bool wl1 = wl1_key[i] == wl1_key[j];
            // 1-WL inequivalence already rules out 2-WL equivalence, so the
            // expensive joint 2-WL run happens only inside 1-WL buckets.
            bool wl2 = wl1 && wl_equivalent(census.graphs[i], census.graphs[j], 2, tuple_cap);
            ++report.region_count[cospec][wl1][wl2];

            if (wl2 && !cospec)
                throw internal_error("scan: 2-WL-equivalent but not co-spectral: " +
                                     census.entries[i].g6 + " vs " + census.entries[j].g6);
            if (wl2) {
                if (isomorphic(census.graphs[i], census.graphs[j])) {
                    ++report.isomorphic_pairs;
                    throw internal_error("scan: census contains isomorphic duplicates: " +
                                         census.entries[i].g6 + " vs " + census.entries[j].g6);
                }
            }
            if (cospec && !wl1 && !report.cospectral_not_wl1_witness)
                report.cospectral_not_wl1_witness = {census.entries[i].g6, census.entries[j].g6};
            if (wl1 && !cospec && !report.wl1_not_cospectral_witness)
                report.wl1_not_cospectral_witness = {census.entries[i].g6, census.entries[j].g6};
        }
    }
    return report;
}

} // namespace specwl
