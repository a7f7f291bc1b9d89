#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/graph.hpp"

namespace specwl {

// Counting first-order logic over the graph signature {E}. The core AST keeps
// only atoms, boolean connectives and the counting quantifier Ex^i; "exactly
// i" and the universal quantifier are desugared at construction:
//   Ex^=i x b  ==>  Ex^i x b & ~Ex^{i+1} x b
//   All x b    ==>  ~Ex x ~b
// Formulas are immutable DAGs: builders share subformulas freely.

enum class FormulaKind { verum, falsum, edge, equals, negation, conjunction, disjunction, exists };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
public:
    FormulaKind kind;
    std::string var_a, var_b;        // atoms: E(var_a,var_b) or var_a=var_b
    std::string bound_var;           // exists
    long threshold = 0;              // exists: at least `threshold` witnesses
    std::vector<Formula> children;
    std::vector<std::string> free_vars;  // sorted, distinct
    std::vector<std::string> all_vars;   // sorted, distinct; |all_vars| is the width
};

namespace detail {

inline std::vector<std::string> merge_sorted(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<std::string> remove_sorted(const std::vector<std::string>& a,
                                              const std::string& x) {
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& v : a)
        if (v != x) out.push_back(v);
    return out;
}

inline std::vector<std::string> insert_sorted(std::vector<std::string> a, const std::string& x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
    return a;
}

} // namespace detail

inline Formula f_true() {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::verum;
    return n;
}

inline Formula f_false() {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::falsum;
    return n;
}

inline Formula f_edge(const std::string& a, const std::string& b) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::edge;
    n->var_a = a;
    n->var_b = b;
    n->free_vars = a == b ? std::vector<std::string>{a}
                          : (a < b ? std::vector<std::string>{a, b} : std::vector<std::string>{b, a});
    n->all_vars = n->free_vars;
    return n;
}

inline Formula f_eq(const std::string& a, const std::string& b) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::equals;
    n->var_a = a;
    n->var_b = b;
    n->free_vars = a == b ? std::vector<std::string>{a}
                          : (a < b ? std::vector<std::string>{a, b} : std::vector<std::string>{b, a});
    n->all_vars = n->free_vars;
    return n;
}

inline Formula f_not(Formula f) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::negation;
    n->free_vars = f->free_vars;
    n->all_vars = f->all_vars;
    n->children.push_back(std::move(f));
    return n;
}

inline Formula f_and(std::vector<Formula> fs) {
    if (fs.empty()) return f_true();
    if (fs.size() == 1) return std::move(fs[0]);
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::conjunction;
    for (const auto& f : fs) {
        n->free_vars = detail::merge_sorted(n->free_vars, f->free_vars);
        n->all_vars = detail::merge_sorted(n->all_vars, f->all_vars);
    }
    n->children = std::move(fs);
    return n;
}

inline Formula f_or(std::vector<Formula> fs) {
    if (fs.empty()) return f_false();
    if (fs.size() == 1) return std::move(fs[0]);
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::disjunction;
    for (const auto& f : fs) {
        n->free_vars = detail::merge_sorted(n->free_vars, f->free_vars);
        n->all_vars = detail::merge_sorted(n->all_vars, f->all_vars);
    }
    n->children = std::move(fs);
    return n;
}

/// Counting quantifier Ex^i: at least i distinct witnesses. i >= 1.
inline Formula f_exists(long i, const std::string& var, Formula body) {
    if (i < 1) throw input_error("counting threshold must be >= 1");
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::exists;
    n->threshold = i;
    n->bound_var = var;
    n->free_vars = detail::remove_sorted(body->free_vars, var);
    n->all_vars = detail::insert_sorted(body->all_vars, var);
    n->children.push_back(std::move(body));
    return n;
}

/// Ex^=i: exactly i witnesses, desugared. i = 0 yields ~Ex^1.
inline Formula f_exists_exactly(long i, const std::string& var, Formula body) {
    if (i < 0) throw input_error("exact counting threshold must be >= 0");
    if (i == 0) return f_not(f_exists(1, var, std::move(body)));
    Formula at_least = f_exists(i, var, body);
    Formula too_many = f_exists(i + 1, var, std::move(body));
    return f_and({std::move(at_least), f_not(std::move(too_many))});
}

/// Universal quantifier, desugared to ~Ex^1 ~body.
inline Formula f_forall(const std::string& var, Formula body) {
    return f_not(f_exists(1, var, f_not(std::move(body))));
}

inline Formula f_implies(Formula a, Formula b) {
    return f_or({f_not(std::move(a)), std::move(b)});
}

/// Number of distinct variable names (free or bound).
inline int width(const Formula& f) { return static_cast<int>(f->all_vars.size()); }

inline const std::vector<std::string>& free_variables(const Formula& f) { return f->free_vars; }

/// Structural equality (pointer-equal subtrees shortcut the recursion).
inline bool equal(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind || a->threshold != b->threshold || a->var_a != b->var_a ||
        a->var_b != b->var_b || a->bound_var != b->bound_var ||
        a->children.size() != b->children.size())
        return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Printing. Grammar (also accepted by parse_formula):
//   impl    := or ( "->" impl )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "~" unary | quantifier unary | primary
//   quantifier := "All" var | "Ex" var | "Ex^" int var | "Ex^=" int var
//   primary := "true" | "false" | "E(" var "," var ")" | var "=" var | "(" impl ")"
// The printer emits only core forms (no "->", "All", "Ex^="), parenthesizes
// every quantifier body, and reparses to a structurally equal formula.

namespace detail {

inline void print_rec(const Formula& f, std::string& out) {
    switch (f->kind) {
        case FormulaKind::verum: out += "true"; break;
        case FormulaKind::falsum: out += "false"; break;
        case FormulaKind::edge: out += "E(" + f->var_a + "," + f->var_b + ")"; break;
        case FormulaKind::equals: out += f->var_a + "=" + f->var_b; break;
        case FormulaKind::negation: {
            const Formula& c = f->children[0];
            bool parens = c->kind == FormulaKind::conjunction || c->kind == FormulaKind::disjunction;
            out += "~";
            if (parens) out += "(";
            print_rec(c, out);
            if (parens) out += ")";
            break;
        }
        case FormulaKind::conjunction:
        case FormulaKind::disjunction: {
            if (f->children.empty()) {
                out += f->kind == FormulaKind::conjunction ? "true" : "false";
                break;
            }
            const char* sep = f->kind == FormulaKind::conjunction ? " & " : " | ";
            bool first = true;
            for (const auto& c : f->children) {
                if (!first) out += sep;
                first = false;
                bool parens = c->kind == FormulaKind::conjunction || c->kind == FormulaKind::disjunction;
                if (parens) out += "(";
                print_rec(c, out);
                if (parens) out += ")";
            }
            break;
        }
        case FormulaKind::exists: {
            out += "Ex";
            if (f->threshold != 1) out += "^" + std::to_string(f->threshold);
            out += " " + f->bound_var + " (";
            print_rec(f->children[0], out);
            out += ")";
            break;
        }
    }
}

} // namespace detail

/// Renders a formula in the textual grammar. `max_chars` guards against
/// expanding a heavily shared DAG into an enormous tree.
inline std::string print_formula(const Formula& f, std::size_t max_chars = SIZE_MAX) {
    std::string out;
    detail::print_rec(f, out);
    if (out.size() > max_chars)
        throw resource_error("printed formula exceeds " + std::to_string(max_chars) + " characters");
    return out;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : s_(text) {}

    Formula parse() {
        Formula f = parse_impl();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "' " + what, pos_);
    }

    bool peek_word(const char* w) {
        skip_ws();
        std::size_t len = std::strlen(w);
        if (s_.compare(pos_, len, w) != 0) return false;
        std::size_t end = pos_ + len;
        if (end < s_.size() &&
            (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            return false;
        return true;
    }

    bool eat_word(const char* w) {
        if (!peek_word(w)) return false;
        pos_ += std::strlen(w);
        return true;
    }

    std::string parse_var() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw parse_error("expected a variable name", pos_);
        std::string name = s_.substr(start, pos_ - start);
        if (name == "All" || name == "Ex" || name == "E" || name == "true" || name == "false")
            throw parse_error("reserved word used as variable: " + name, start);
        return name;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected an integer", pos_);
        return std::stol(s_.substr(start, pos_ - start));
    }

    Formula parse_impl() {
        Formula lhs = parse_or();
        skip_ws();
        if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
            pos_ += 2;
            return f_implies(std::move(lhs), parse_impl());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula first = parse_and();
        std::vector<Formula> parts;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '|') {
                ++pos_;
                if (parts.empty()) parts.push_back(std::move(first));
                parts.push_back(parse_and());
            } else {
                break;
            }
        }
        if (parts.empty()) return first;
        return f_or(std::move(parts));
    }

    Formula parse_and() {
        Formula first = parse_unary();
        std::vector<Formula> parts;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '&') {
                ++pos_;
                if (parts.empty()) parts.push_back(std::move(first));
                parts.push_back(parse_unary());
            } else {
                break;
            }
        }
        if (parts.empty()) return first;
        return f_and(std::move(parts));
    }

    Formula parse_unary() {
        skip_ws();
        if (eat('~')) return f_not(parse_unary());
        if (eat_word("All")) {
            std::string var = parse_var();
            return f_forall(var, parse_unary());
        }
        if (peek_word("Ex")) {
            // "Ex", "Ex^i" or "Ex^=i"
            pos_ += 2;
            long threshold = 1;
            bool exact = false;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                if (pos_ < s_.size() && s_[pos_] == '=') {
                    ++pos_;
                    exact = true;
                }
                threshold = parse_int();
                if (threshold < (exact ? 0 : 1))
                    throw parse_error("counting threshold out of range", pos_);
            }
            std::string var = parse_var();
            Formula body = parse_unary();
            return exact ? f_exists_exactly(threshold, var, std::move(body))
                         : f_exists(threshold, var, std::move(body));
        }
        return parse_primary();
    }

    Formula parse_primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of formula", pos_);
        if (eat('(')) {
            Formula f = parse_impl();
            expect(')', "to close group");
            return f;
        }
        if (eat_word("true")) return f_true();
        if (eat_word("false")) return f_false();
        if (peek_word("E")) {
            std::size_t save = pos_;
            pos_ += 1;
            if (eat('(')) {
                std::string a = parse_var();
                expect(',', "between atom arguments");
                std::string b = parse_var();
                expect(')', "to close atom");
                return f_edge(a, b);
            }
            pos_ = save;
            throw parse_error("expected E(a,b)", pos_);
        }
        std::string a = parse_var();
        expect('=', "in equality atom");
        std::string b = parse_var();
        return f_eq(a, b);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Formula parse_formula(const std::string& text) {
    return detail::FormulaParser(text).parse();
}

// ---------------------------------------------------------------------------
// Evaluation.

/// Memoizing model checker for one (graph, formula) pair. The memo is keyed by
/// (node, assignment restricted to the node's free variables) and survives
/// across eval() calls, which pays off when the same formula is checked at
/// many vertex tuples. Exponential in width, fine for width <= 4 at n <= 20.
class Evaluator {
public:
    Evaluator(const Graph& g, Formula f) : g_(g), root_(std::move(f)) {
        var_names_ = root_->all_vars;
        compile(root_);
        slots_.assign(var_names_.size(), -1);
        memo_enabled_ = var_names_.size() <= 8 && g_.n() < 254;
    }

    /// Evaluates under the given assignment of free variables to vertices.
    bool eval(const std::map<std::string, int>& assignment = {}) {
        for (const auto& v : root_->free_vars) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw input_error("unassigned free variable: " + v);
            if (it->second < 0 || it->second >= g_.n())
                throw input_error("assignment maps " + v + " to an invalid vertex");
        }
        std::fill(slots_.begin(), slots_.end(), -1);
        for (const auto& [name, vertex] : assignment) {
            auto it = std::lower_bound(var_names_.begin(), var_names_.end(), name);
            if (it != var_names_.end() && *it == name)
                slots_[static_cast<std::size_t>(it - var_names_.begin())] = vertex;
        }
        return eval_node(root_.get());
    }

private:
    struct NodeInfo {
        std::vector<int> free_slots;  // sorted slot ids of free variables
        int slot_a = -1, slot_b = -1; // atoms
        int bound_slot = -1;          // exists
        std::unordered_map<std::uint64_t, bool> memo;
    };

    int slot_of(const std::string& name) const {
        auto it = std::lower_bound(var_names_.begin(), var_names_.end(), name);
        return static_cast<int>(it - var_names_.begin());
    }

    void compile(const Formula& f) {
        if (info_.count(f.get())) return;
        NodeInfo info;
        for (const auto& v : f->free_vars) info.free_slots.push_back(slot_of(v));
        if (f->kind == FormulaKind::edge || f->kind == FormulaKind::equals) {
            info.slot_a = slot_of(f->var_a);
            info.slot_b = slot_of(f->var_b);
        }
        if (f->kind == FormulaKind::exists) info.bound_slot = slot_of(f->bound_var);
        info_.emplace(f.get(), std::move(info));
        for (const auto& c : f->children) compile(c);
    }

    bool eval_node(const FormulaNode* f) {
        switch (f->kind) {
            case FormulaKind::verum: return true;
            case FormulaKind::falsum: return false;
            case FormulaKind::edge: {
                const NodeInfo& info = info_.at(f);
                return g_.adjacent(slots_[info.slot_a], slots_[info.slot_b]);
            }
            case FormulaKind::equals: {
                const NodeInfo& info = info_.at(f);
                return slots_[info.slot_a] == slots_[info.slot_b];
            }
            default: break;
        }

        NodeInfo& info = info_.at(f);
        std::uint64_t key = 0;
        if (memo_enabled_) {
            for (int s : info.free_slots) key = (key << 8) | static_cast<std::uint64_t>(slots_[s] + 1);
            auto it = info.memo.find(key);
            if (it != info.memo.end()) return it->second;
        }

        bool result = false;
        switch (f->kind) {
            case FormulaKind::negation:
                result = !eval_node(f->children[0].get());
                break;
            case FormulaKind::conjunction: {
                result = true;
                for (const auto& c : f->children)
                    if (!eval_node(c.get())) {
                        result = false;
                        break;
                    }
                break;
            }
            case FormulaKind::disjunction: {
                result = false;
                for (const auto& c : f->children)
                    if (eval_node(c.get())) {
                        result = true;
                        break;
                    }
                break;
            }
            case FormulaKind::exists: {
                const int n = g_.n();
                const int saved = slots_[info.bound_slot];
                long count = 0;
                for (int v = 0; v < n; ++v) {
                    if (count >= f->threshold) break;
                    if (count + (n - v) < f->threshold) break;  // cannot reach threshold
                    slots_[info.bound_slot] = v;
                    if (eval_node(f->children[0].get())) ++count;
                }
                slots_[info.bound_slot] = saved;
                result = count >= f->threshold;
                break;
            }
            default:
                throw internal_error("unhandled formula kind");
        }

        if (memo_enabled_) info.memo.emplace(key, result);
        return result;
    }

    const Graph& g_;
    Formula root_;
    std::vector<std::string> var_names_;  // sorted
    std::vector<int> slots_;
    std::unordered_map<const FormulaNode*, NodeInfo> info_;
    bool memo_enabled_;
};

/// One-shot evaluation; builds a throwaway Evaluator.
inline bool eval(const Graph& g, const Formula& f, const std::map<std::string, int>& assignment = {}) {
    return Evaluator(g, f).eval(assignment);
}

} // namespace specwl
