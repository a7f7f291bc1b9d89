#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/formula.hpp"
#include "specwl/graph.hpp"
#include "specwl/spectral.hpp"

namespace specwl {

/// One (multiplicity, part value) pair of an indexed partition.
struct IndexedPart {
    long count;  // i_j >= 1
    long value;  // k_j >= 1
    bool operator==(const IndexedPart&) const = default;
};

/// Indexed partition of k: distinct positive part values with multiplicities,
/// sum(count*value) = k, stored sorted ascending by value.
using IndexedPartition = std::vector<IndexedPart>;

namespace detail {

inline void partitions_rec(long remaining, long max_value, long parts_budget,
                           IndexedPartition& current, std::vector<IndexedPartition>& out) {
    if (remaining == 0) {
        IndexedPartition sorted = current;
        std::reverse(sorted.begin(), sorted.end());  // built descending, emit ascending
        out.push_back(std::move(sorted));
        return;
    }
    for (long value = std::min(remaining, max_value); value >= 1; --value) {
        for (long count = 1; count * value <= remaining && count <= parts_budget; ++count) {
            current.push_back({count, value});
            partitions_rec(remaining - count * value, value - 1, parts_budget - count, current, out);
            current.pop_back();
        }
    }
}

} // namespace detail

/// All indexed partitions of k with sum of multiplicities at most
/// max_parts_sum. Deterministic order: largest part value first.
inline std::vector<IndexedPartition> indexed_partitions(long k, long max_parts_sum) {
    if (k < 1) throw input_error("indexed_partitions: k must be >= 1");
    std::vector<IndexedPartition> out;
    IndexedPartition current;
    detail::partitions_rec(k, k, max_parts_sum, current, out);
    return out;
}

struct FormulaBuildOptions {
    /// Hard budget on distinct AST nodes created by one builder; exceeding it
    /// raises resource_error instead of thrashing.
    std::uint64_t node_cap = 1'000'000;
    /// Ceiling on the number of witnesses a single disjunct may pin down: the
    /// maximum degree for walk formulas, the maximum vertex count for trace
    /// sentences. Built formulas are exact on every graph within the ceiling.
    long support_bound = 8;
};

/// Builds the three-variable counting formulas for walk counts:
///
///   psi(l,k) with free variables x,y holds at (v,u) iff there are exactly k
///   walks of length l from v to u;
///
///   phi_lk(l,k) is a sentence that holds iff the total number of closed
///   l-walks is exactly k;
///
///   phi_g(G) conjoins phi_lk(l, tr(A^l)) for l = 1..n, so H satisfies it iff
///   H has G's closed-walk counts, i.e. iff H and G are co-spectral.
///
/// The inductive step for psi splits the k walks by the first step: a disjunct
/// fixes, for each walk count appearing among x's neighbours, how many
/// neighbours carry it. Neighbours contributing zero walks are pinned by an
/// explicit count m, and the conjunct Ex^=d z E(x,z) with d = (positive-part
/// multiplicities) + m closes the degree so no neighbour escapes accounting.
/// The same pattern over all vertices (with Ex^=d x x=x closing the vertex
/// count) yields phi_lk. Subformulas are shared aggressively, so formulas are
/// DAGs and the node budget counts distinct nodes.
class FormulaBuilder {
public:
    explicit FormulaBuilder(FormulaBuildOptions opts = {}) : opts_(opts) {
        if (opts_.node_cap == 0 || opts_.support_bound < 1)
            throw input_error("FormulaBuilder: bad options");
    }

    std::uint64_t nodes_created() const { return nodes_; }

    /// psi^l_k(x,y).
    Formula psi(long l, long k) {
        if (l < 1 || k < 0) throw input_error("psi requires l >= 1, k >= 0");
        auto it = psi_xy_.find({l, k});
        if (it != psi_xy_.end()) return it->second;

        Formula result;
        if (l == 1) {
            if (k == 0)
                result = charged(f_not(charged(f_edge("x", "y"))));
            else if (k == 1)
                result = charged(f_edge("x", "y"));
            else
                result = charged(f_false());
        } else if (k == 0) {
            // forall z (E(x,z) -> psi^{l-1}_0(z,y))
            result = forall_z(implies_z(edge_xz(), psi_zy(l - 1, 0)));
        } else {
            std::vector<Formula> disjuncts;
            for (const auto& partition : indexed_partitions(k, opts_.support_bound)) {
                long positive_mult = 0;
                for (const auto& part : partition) positive_mult += part.count;
                for (long zero_mult = 0; positive_mult + zero_mult <= opts_.support_bound;
                     ++zero_mult) {
                    std::vector<Formula> conjuncts;
                    for (const auto& part : partition)
                        conjuncts.push_back(neighbour_count_conjunct(part.count, l - 1, part.value));
                    if (zero_mult > 0)
                        conjuncts.push_back(neighbour_count_conjunct(zero_mult, l - 1, 0));
                    conjuncts.push_back(degree_conjunct(positive_mult + zero_mult));
                    disjuncts.push_back(charged(f_and(std::move(conjuncts))));
                }
            }
            result = charged(f_or(std::move(disjuncts)));
        }
        psi_xy_.emplace(std::make_pair(l, k), result);
        return result;
    }

    /// phi^l_k sentence: the total number of closed l-walks equals k.
    Formula phi_lk(long l, long k) {
        if (l < 1 || k < 0) throw input_error("phi_lk requires l >= 1, k >= 0");
        auto it = phi_.find({l, k});
        if (it != phi_.end()) return it->second;

        std::vector<Formula> disjuncts;
        auto emit = [&](const IndexedPartition& partition, long positive_mult) {
            for (long zero_mult = 0; positive_mult + zero_mult <= opts_.support_bound; ++zero_mult) {
                std::vector<Formula> conjuncts;
                for (const auto& part : partition)
                    conjuncts.push_back(diagonal_count_conjunct(part.count, l, part.value));
                if (zero_mult > 0) conjuncts.push_back(diagonal_count_conjunct(zero_mult, l, 0));
                conjuncts.push_back(vertex_count_conjunct(positive_mult + zero_mult));
                disjuncts.push_back(charged(f_and(std::move(conjuncts))));
            }
        };
        if (k == 0) {
            emit({}, 0);
        } else {
            for (const auto& partition : indexed_partitions(k, opts_.support_bound)) {
                long positive_mult = 0;
                for (const auto& part : partition) positive_mult += part.count;
                emit(partition, positive_mult);
            }
        }
        Formula result = charged(f_or(std::move(disjuncts)));
        phi_.emplace(std::make_pair(l, k), result);
        return result;
    }

    /// phi_G sentence for a concrete graph. The builder's support bound must
    /// already cover n; raising it mid-life would invalidate cached
    /// subformulas, so that is an error rather than a silent adjustment.
    Formula phi_g(const Graph& g) {
        const int n = g.n();
        if (n < 1) throw input_error("phi_g requires a non-empty graph");
        if (n > opts_.support_bound)
            throw input_error("phi_g: support bound " + std::to_string(opts_.support_bound) +
                              " is below the vertex count " + std::to_string(n));
        TraceSequence t = trace_powers(g, n);
        std::vector<Formula> conjuncts;
        for (int l = 1; l <= n; ++l) {
            const BigInt& tr = t.traces[l - 1];
            if (!tr.fits_slong_p() || tr.get_si() > static_cast<long>(opts_.node_cap))
                throw resource_error("phi_g: tr(A^" + std::to_string(l) +
                                     ") exceeds the node budget of " + std::to_string(opts_.node_cap));
            conjuncts.push_back(phi_lk(l, tr.get_si()));
        }
        return charged(f_and(std::move(conjuncts)));
    }

private:
    // Budget accounting: charge one for each node this builder creates. Shared
    // cache hits are free, which is the point of building DAGs.
    Formula charged(Formula f) {
        if (++nodes_ > opts_.node_cap)
            throw resource_error("formula node budget of " + std::to_string(opts_.node_cap) +
                                 " exceeded");
        return f;
    }

    Formula edge_xz() {
        if (!edge_xz_) edge_xz_ = charged(f_edge("x", "z"));
        return edge_xz_;
    }

    Formula forall_z(Formula body) {
        // ~Ex z ~body, three charged nodes
        return charged(f_not(charged(f_exists(1, "z", charged(f_not(std::move(body)))))));
    }

    Formula implies_z(Formula a, Formula b) {
        return charged(f_or({charged(f_not(std::move(a))), std::move(b)}));
    }

    Formula exists_exactly_charged(long i, const std::string& var, Formula body) {
        if (i == 0) return charged(f_not(charged(f_exists(1, var, std::move(body)))));
        Formula at_least = charged(f_exists(i, var, body));
        Formula too_many = charged(f_not(charged(f_exists(i + 1, var, std::move(body)))));
        return charged(f_and({std::move(at_least), std::move(too_many)}));
    }

    /// Ex^=i z (E(x,z) & psi^l_value(z,y)); shared across every partition that
    /// mentions the same (i, l, value).
    Formula neighbour_count_conjunct(long i, long l, long value) {
        auto key = std::make_tuple(i, l, value);
        auto it = neighbour_conjuncts_.find(key);
        if (it != neighbour_conjuncts_.end()) return it->second;
        Formula body = charged(f_and({edge_xz(), psi_zy(l, value)}));
        Formula out = exists_exactly_charged(i, "z", std::move(body));
        neighbour_conjuncts_.emplace(key, out);
        return out;
    }

    /// Ex^=d z E(x,z).
    Formula degree_conjunct(long d) {
        auto it = degree_conjuncts_.find(d);
        if (it != degree_conjuncts_.end()) return it->second;
        Formula out = exists_exactly_charged(d, "z", edge_xz());
        degree_conjuncts_.emplace(d, out);
        return out;
    }

    /// Ex^=i x Ex y (x=y & psi^l_value(x,y)): exactly i vertices whose closed
    /// l-walk count is `value`.
    Formula diagonal_count_conjunct(long i, long l, long value) {
        auto key = std::make_tuple(i, l, value);
        auto it = diagonal_conjuncts_.find(key);
        if (it != diagonal_conjuncts_.end()) return it->second;
        auto inner_key = std::make_pair(l, value);
        Formula inner;
        auto iit = diagonal_inner_.find(inner_key);
        if (iit != diagonal_inner_.end()) {
            inner = iit->second;
        } else {
            inner = charged(
                f_exists(1, "y", charged(f_and({charged(f_eq("x", "y")), psi(l, value)}))));
            diagonal_inner_.emplace(inner_key, inner);
        }
        Formula out = exists_exactly_charged(i, "x", std::move(inner));
        diagonal_conjuncts_.emplace(key, out);
        return out;
    }

    /// Ex^=d x x=x: the graph has exactly d vertices.
    Formula vertex_count_conjunct(long d) {
        auto it = vertex_conjuncts_.find(d);
        if (it != vertex_conjuncts_.end()) return it->second;
        if (!eq_xx_) eq_xx_ = charged(f_eq("x", "x"));
        Formula out = exists_exactly_charged(d, "x", eq_xx_);
        vertex_conjuncts_.emplace(d, out);
        return out;
    }

    /// psi^l_k with x and z interchanged throughout (free or bound).
    Formula psi_zy(long l, long k) {
        auto it = psi_zy_.find({l, k});
        if (it != psi_zy_.end()) return it->second;
        std::unordered_map<const FormulaNode*, Formula> swap_cache;
        Formula out = swap_xz(psi(l, k), swap_cache);
        psi_zy_.emplace(std::make_pair(l, k), out);
        return out;
    }

    Formula swap_xz(const Formula& f, std::unordered_map<const FormulaNode*, Formula>& cache) {
        auto it = cache.find(f.get());
        if (it != cache.end()) return it->second;
        auto rename = [](const std::string& v) -> std::string {
            if (v == "x") return "z";
            if (v == "z") return "x";
            return v;
        };
        Formula out;
        switch (f->kind) {
            case FormulaKind::verum:
            case FormulaKind::falsum:
                out = f;  // no variables; share as-is
                break;
            case FormulaKind::edge:
                out = charged(f_edge(rename(f->var_a), rename(f->var_b)));
                break;
            case FormulaKind::equals:
                out = charged(f_eq(rename(f->var_a), rename(f->var_b)));
                break;
            case FormulaKind::negation:
                out = charged(f_not(swap_xz(f->children[0], cache)));
                break;
            case FormulaKind::conjunction:
            case FormulaKind::disjunction: {
                std::vector<Formula> kids;
                kids.reserve(f->children.size());
                for (const auto& c : f->children) kids.push_back(swap_xz(c, cache));
                out = charged(f->kind == FormulaKind::conjunction ? f_and(std::move(kids))
                                                                  : f_or(std::move(kids)));
                break;
            }
            case FormulaKind::exists:
                out = charged(
                    f_exists(f->threshold, rename(f->bound_var), swap_xz(f->children[0], cache)));
                break;
        }
        cache.emplace(f.get(), out);
        return out;
    }

    FormulaBuildOptions opts_;
    std::uint64_t nodes_ = 0;
    std::map<std::pair<long, long>, Formula> psi_xy_, psi_zy_, phi_;
    std::map<std::tuple<long, long, long>, Formula> neighbour_conjuncts_, diagonal_conjuncts_;
    std::map<std::pair<long, long>, Formula> diagonal_inner_;
    std::map<long, Formula> degree_conjuncts_, vertex_conjuncts_;
    Formula edge_xz_, eq_xx_;
};

inline Formula build_psi(long l, long k, std::uint64_t node_cap = 1'000'000) {
    FormulaBuilder b({node_cap, 8});
    return b.psi(l, k);
}

inline Formula build_phi_lk(long l, long k, std::uint64_t node_cap = 1'000'000) {
    FormulaBuilder b({node_cap, 8});
    return b.phi_lk(l, k);
}

inline Formula build_phi_g(const Graph& g, std::uint64_t node_cap = 1'000'000) {
    FormulaBuilder b({node_cap, std::max(8L, static_cast<long>(g.n()))});
    return b.phi_g(g);
}

/// Extension axiom eta_{r,s}: any r+s pairwise distinct vertices admit a
/// vertex adjacent to the first r and non-adjacent (and distinct) to the
/// remaining s. Plain first-order, r+s+1 variables, no counting quantifiers.
inline Formula extension_axiom(int r, int s) {
    if (r < 0 || s < 0 || r + s < 1) throw input_error("extension_axiom requires r,s >= 0, r+s >= 1");
    const int k = r + s;
    auto var = [](int i) { return "x" + std::to_string(i + 1); };

    std::vector<Formula> distinct;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) distinct.push_back(f_not(f_eq(var(i), var(j))));

    std::vector<Formula> wanted;
    for (int i = 0; i < r; ++i) wanted.push_back(f_edge(var(i), "y"));
    for (int i = r; i < k; ++i) {
        wanted.push_back(f_not(f_edge(var(i), "y")));
        wanted.push_back(f_not(f_eq(var(i), "y")));
    }
    Formula body = f_exists(1, "y", f_and(std::move(wanted)));
    Formula inner = f_implies(f_and(std::move(distinct)), std::move(body));
    for (int i = k - 1; i >= 0; --i) inner = f_forall(var(i), std::move(inner));
    return inner;
}

namespace detail {

/// Tries to extend: is there a y adjacent to everything in `want_adjacent`,
/// non-adjacent to everything in `want_nonadjacent`, and outside both sets?
inline bool extension_witness_exists(const Graph& g, const std::vector<int>& want_adjacent,
                                     const std::vector<int>& want_nonadjacent) {
    for (int y = 0; y < g.n(); ++y) {
        bool ok = true;
        for (int v : want_adjacent)
            if (!g.adjacent(v, y)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v : want_nonadjacent)
            if (v == y || g.adjacent(v, y)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline bool extension_check_rec(const Graph& g, int r, int s, std::vector<int>& chosen,
                                std::vector<bool>& used) {
    const int k = r + s;
    if (static_cast<int>(chosen.size()) == k) {
        std::vector<int> adj(chosen.begin(), chosen.begin() + r);
        std::vector<int> nonadj(chosen.begin() + r, chosen.end());
        return extension_witness_exists(g, adj, nonadj);
    }
    // Unordered within each block: enforce ascending order inside the first r
    // and inside the last s (the property is symmetric under those swaps).
    int block_start = static_cast<int>(chosen.size()) < r ? 0 : r;
    int from = static_cast<int>(chosen.size()) == block_start ? 0 : chosen.back() + 1;
    for (int v = from; v < g.n(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        chosen.push_back(v);
        bool ok = extension_check_rec(g, r, s, chosen, used);
        chosen.pop_back();
        used[v] = false;
        if (!ok) return false;
    }
    return true;
}

} // namespace detail

/// Direct combinatorial check of the k-extension property: G satisfies
/// eta_{r,s} for every r+s = k. Agrees with eval(extension_axiom(r,s)) but
/// enumerates distinct tuples directly instead of going through the formula.
inline bool has_extension_property(const Graph& g, int k) {
    if (k < 1) throw input_error("has_extension_property requires k >= 1");
    // Note: with fewer than k vertices every axiom holds vacuously, matching
    // the formula semantics (no all-distinct tuple exists).
    for (int r = 0; r <= k; ++r) {
        std::vector<int> chosen;
        std::vector<bool> used(g.n(), false);
        if (!detail::extension_check_rec(g, r, k - r, chosen, used)) return false;
    }
    return true;
}

} // namespace specwl
