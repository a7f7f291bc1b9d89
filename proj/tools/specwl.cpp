// specwl command line tool: exact graph spectra, counting-logic formulas,
// Weisfeiler-Leman refinement, symmetric powers, coherent configurations and
// the small-graph census, as subcommands of a single binary.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage error,
// 3 resource budget exceeded, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "specwl/acceptance.hpp"
#include "specwl/cellular.hpp"
#include "specwl/census.hpp"
#include "specwl/config.hpp"
#include "specwl/errors.hpp"
#include "specwl/formula.hpp"
#include "specwl/generators.hpp"
#include "specwl/graph6.hpp"
#include "specwl/logic_builders.hpp"
#include "specwl/spectral.hpp"
#include "specwl/sympower.hpp"
#include "specwl/version.hpp"
#include "specwl/wl.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace specwl;

// ---------------------------------------------------------------------------
// Graph arguments: a file path (graph6 or edge-list, sniffed), "-" for stdin,
// a generator expression like "cycle:4+complete:1" or "paley:13", or a literal
// graph6 string.

std::vector<long> parse_gen_args(const std::string& term, const std::string& name) {
    std::vector<long> args;
    auto colon = term.find(':');
    if (colon == std::string::npos) return args;
    std::string rest = term.substr(colon + 1);
    std::istringstream in(rest);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t pos = 0;
            args.push_back(std::stol(piece, &pos));
            if (pos != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw input_error("generator " + name + ": bad argument '" + piece + "'");
        }
    }
    return args;
}

bool is_generator_name(const std::string& name) {
    static const char* names[] = {"cycle",  "path",       "complete", "empty",
                                  "edgeless", "complete_bipartite", "paley",
                                  "cubic_paley", "shrikhande", "rook_4x4"};
    for (const char* n : names)
        if (name == n) return true;
    return false;
}

Graph build_generator_term(const std::string& term) {
    auto colon = term.find(':');
    std::string name = term.substr(0, colon);
    std::vector<long> args = parse_gen_args(term, name);
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw input_error("generator " + name + " expects " + std::to_string(count) +
                              " argument(s)");
    };
    if (name == "cycle") { want(1); return cycle(static_cast<int>(args[0])); }
    if (name == "path") { want(1); return path(static_cast<int>(args[0])); }
    if (name == "complete") { want(1); return complete(static_cast<int>(args[0])); }
    if (name == "empty" || name == "edgeless") { want(1); return edgeless(static_cast<int>(args[0])); }
    if (name == "complete_bipartite") {
        want(2);
        return complete_bipartite(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (name == "paley") { want(1); return paley(args[0]); }
    if (name == "cubic_paley") { want(1); return cubic_paley(args[0]); }
    if (name == "shrikhande") { want(0); return shrikhande(); }
    if (name == "rook_4x4") { want(0); return rook_4x4(); }
    throw input_error("unknown generator: " + name);
}

bool looks_like_expression(const std::string& text) {
    std::istringstream in(text);
    std::string term;
    while (std::getline(in, term, '+')) {
        if (term.empty()) return false;
        if (!is_generator_name(term.substr(0, term.find(':')))) return false;
    }
    return true;
}

Graph parse_graph_content(const std::string& content, const std::string& origin) {
    // First non-blank line decides: a lone integer means edge-list format.
    std::istringstream probe(content);
    std::string line;
    while (std::getline(probe, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        long n;
        std::size_t pos = 0;
        bool numeric = true;
        try {
            n = std::stol(tok, &pos);
            numeric = pos == tok.size() && n >= 0;
        } catch (const std::exception&) {
            numeric = false;
        }
        if (numeric) {
            std::istringstream body(content);
            return parse_edge_list(body);
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return parse_graph6(line);
    }
    throw input_error(origin + ": empty graph input");
}

Graph resolve_graph_arg(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph_content(buf.str(), "stdin");
    }
    {
        std::ifstream file(arg);
        if (file) {
            std::ostringstream buf;
            buf << file.rdbuf();
            return parse_graph_content(buf.str(), arg);
        }
    }
    if (looks_like_expression(arg)) {
        std::istringstream in(arg);
        std::string term;
        Graph acc;
        bool first = true;
        while (std::getline(in, term, '+')) {
            Graph g = build_generator_term(term);
            acc = first ? g : disjoint_union(acc, g);
            first = false;
        }
        return acc;
    }
    try {
        return parse_graph6(arg);
    } catch (const parse_error&) {
        throw input_error("cannot interpret graph argument '" + arg +
                          "': not a readable file, generator expression, or graph6 string");
    }
}

// ---------------------------------------------------------------------------
// Output plumbing.

struct Cli {
    RunConfig cfg;
    std::string config_file;
    int exit_code = 0;

    json envelope(const std::string& command) const {
        json out;
        out["tool"] = "specwl";
        out["version"] = kVersion;
        out["command"] = command;
        json c;
        c["tuple_cap"] = cfg.tuple_cap;
        c["ast_node_cap"] = cfg.ast_node_cap;
        c["sympower_vertex_cap"] = cfg.sympower_vertex_cap;
        c["census_n_cap"] = cfg.census_n_cap;
        c["workers"] = cfg.workers;
        c["seed"] = cfg.seed;
        c["format"] = cfg.format == OutputFormat::json ? "json" : "table";
        out["config"] = std::move(c);
        return out;
    }

    void emit(json j, const std::string& table) const {
        if (cfg.format == OutputFormat::json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << table;
    }
};

json charpoly_json(const CharPoly& p) {
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs) coeffs.push_back(c.get_str());
    return coeffs;
}

std::string histogram_table(const std::map<int, std::size_t>& h) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [color, size] : h) {
        if (!first) out << " ";
        first = false;
        out << color << ":" << size;
    }
    return out.str();
}

json histogram_json(const std::map<int, std::size_t>& h) {
    json out = json::object();
    for (const auto& [color, size] : h) out[std::to_string(color)] = size;
    return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void cmd_gen(Cli& cli, const std::string& expr, const std::string& out_path, bool edge_list) {
    Graph g = resolve_graph_arg(expr);
    std::string text = edge_list ? write_edge_list(g) : write_graph6(g) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open output file: " + out_path);
        out << text;
    }
}

void cmd_spectrum(Cli& cli, const std::string& graph_arg) {
    Graph g = resolve_graph_arg(graph_arg);
    CharPoly p = charpoly_direct(g);
    FloatSpectrum s = spectrum_float(g);
    json j = cli.envelope("spectrum");
    json r;
    r["n"] = g.n();
    r["edges"] = g.edge_count();
    r["charpoly"] = charpoly_json(p);
    r["charpoly_pretty"] = to_string(p);
    r["eigenvalues"] = s.eigenvalues;
    j["result"] = std::move(r);

    std::ostringstream table;
    table << "n: " << g.n() << "\nedges: " << g.edge_count() << "\ncharpoly: " << to_string(p)
          << "\ncoefficients (c_0..c_n):";
    for (const BigInt& c : p.coeffs) table << " " << c.get_str();
    table << "\neigenvalues:";
    table.setf(std::ios::fixed);
    table.precision(9);
    for (double e : s.eigenvalues) table << " " << e;
    table << "\n";
    cli.emit(std::move(j), table.str());
}

void cmd_cospec(Cli& cli, const std::string& a, const std::string& b) {
    Graph g = resolve_graph_arg(a), h = resolve_graph_arg(b);
    CharPoly pg = charpoly_direct(g), ph = charpoly_direct(h);
    bool verdict = g.n() == h.n() && pg == ph;
    json j = cli.envelope("cospec");
    json r;
    r["cospectral"] = verdict;
    r["charpoly_g1"] = charpoly_json(pg);
    r["charpoly_g2"] = charpoly_json(ph);
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "cospectral: " << (verdict ? "true" : "false") << "\ncharpoly g1: " << to_string(pg)
          << "\ncharpoly g2: " << to_string(ph) << "\n";
    cli.emit(std::move(j), table.str());
    cli.exit_code = verdict ? 0 : 1;
}

void cmd_walks(Cli& cli, const std::string& graph_arg, int v, int u, long l) {
    Graph g = resolve_graph_arg(graph_arg);
    BigInt count = walk_count(g, v, u, l);
    json j = cli.envelope("walks");
    json r;
    r["v"] = v;
    r["u"] = u;
    r["l"] = l;
    r["count"] = count.get_str();
    j["result"] = std::move(r);
    cli.emit(std::move(j), count.get_str() + "\n");
}

void cmd_logic_eval(Cli& cli, const std::string& graph_arg, const std::string& formula_text) {
    Graph g = resolve_graph_arg(graph_arg);
    Formula f = parse_formula(formula_text);
    if (!free_variables(f).empty()) {
        std::string names;
        for (const auto& v : free_variables(f)) names += (names.empty() ? "" : ", ") + v;
        throw input_error("formula has free variables (" + names + "); only sentences can be evaluated");
    }
    bool verdict = eval(g, f);
    json j = cli.envelope("logic eval");
    json r;
    r["formula"] = print_formula(f, 1 << 20);
    r["width"] = width(f);
    r["holds"] = verdict;
    j["result"] = std::move(r);
    cli.emit(std::move(j), std::string(verdict ? "true" : "false") + "\n");
    cli.exit_code = verdict ? 0 : 1;
}

void cmd_logic_psi(Cli& cli, long l, long k, bool phi) {
    FormulaBuilder builder({cli.cfg.ast_node_cap, 8});
    Formula f = phi ? builder.phi_lk(l, k) : builder.psi(l, k);
    std::string text = print_formula(f, 16u << 20);
    json j = cli.envelope(phi ? "logic phi" : "logic psi");
    json r;
    r["l"] = l;
    r["k"] = k;
    r["width"] = width(f);
    r["nodes_created"] = builder.nodes_created();
    r["formula"] = text;
    j["result"] = std::move(r);
    cli.emit(std::move(j), text + "\n");
}

void cmd_logic_ext_axiom(Cli& cli, int r_arg, int s_arg) {
    Formula f = extension_axiom(r_arg, s_arg);
    std::string text = print_formula(f);
    json j = cli.envelope("logic ext-axiom");
    json r;
    r["r"] = r_arg;
    r["s"] = s_arg;
    r["width"] = width(f);
    r["formula"] = text;
    j["result"] = std::move(r);
    cli.emit(std::move(j), text + "\n");
}

void cmd_logic_ext_prop(Cli& cli, const std::string& graph_arg, int k) {
    Graph g = resolve_graph_arg(graph_arg);
    bool verdict = has_extension_property(g, k);
    json j = cli.envelope("logic ext-prop");
    json r;
    r["k"] = k;
    r["has_extension_property"] = verdict;
    j["result"] = std::move(r);
    cli.emit(std::move(j), std::string(verdict ? "true" : "false") + "\n");
    cli.exit_code = verdict ? 0 : 1;
}

void cmd_wl_refine(Cli& cli, const std::string& graph_arg, int k) {
    Graph g = resolve_graph_arg(graph_arg);
    Coloring c = k == 1 ? wl1_stable(g) : wlk_stable(g, k, cli.cfg.tuple_cap);
    json j = cli.envelope("wl refine");
    json r;
    r["k"] = k;
    r["rounds"] = c.rounds;
    r["round_class_counts"] = c.round_class_counts;
    r["stable_classes"] = c.class_count();
    r["histogram"] = histogram_json(c.histogram);
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "k: " << k << "\nrounds: " << c.rounds << "\nclasses per round:";
    for (std::size_t count : c.round_class_counts) table << " " << count;
    table << "\nstable classes: " << c.class_count() << "\nhistogram: " << histogram_table(c.histogram)
          << "\n";
    cli.emit(std::move(j), table.str());
}

void cmd_wl_equiv(Cli& cli, const std::string& a, const std::string& b, int k) {
    Graph g = resolve_graph_arg(a), h = resolve_graph_arg(b);
    JointColoring jc = joint_wl_stable(g, h, k, cli.cfg.tuple_cap);
    bool verdict = jc.left.histogram == jc.right.histogram;
    json j = cli.envelope("wl equiv");
    json r;
    r["k"] = k;
    r["equivalent"] = verdict;
    r["rounds"] = jc.left.rounds;
    r["classes_g1"] = jc.left.class_count();
    r["classes_g2"] = jc.right.class_count();
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "equivalent: " << (verdict ? "true" : "false") << "\nrounds: " << jc.left.rounds << "\n";
    cli.emit(std::move(j), table.str());
    cli.exit_code = verdict ? 0 : 1;
}

void cmd_sympower_build(Cli& cli, const std::string& graph_arg, int k) {
    Graph g = resolve_graph_arg(graph_arg);
    Graph power = symmetric_power(g, k, cli.cfg.sympower_vertex_cap);
    std::cout << write_graph6(power) << "\n";
}

void cmd_sympower_walks(Cli& cli, const std::string& graph_arg, int k, long l) {
    Graph g = resolve_graph_arg(graph_arg);
    BigInt count = k_walk_count_dp(g, k, l, cli.cfg.sympower_vertex_cap);
    json j = cli.envelope("sympower walks");
    json r;
    r["k"] = k;
    r["l"] = l;
    r["closed_walks"] = count.get_str();
    j["result"] = std::move(r);
    cli.emit(std::move(j), count.get_str() + "\n");
}

void cmd_cellular_config(Cli& cli, const std::string& graph_arg, bool with_tensor) {
    Graph g = resolve_graph_arg(graph_arg);
    CoherentConfig cfg = coherent_config(g, cli.cfg.tuple_cap);
    json j = cli.envelope("cellular config");
    json r;
    r["n"] = cfg.n;
    r["classes"] = cfg.num_classes;
    r["rounds"] = cfg.rounds;
    json classes = json::array();
    for (int c = 0; c < cfg.num_classes; ++c) {
        json cj;
        cj["id"] = c;
        cj["size"] = cfg.class_size[c];
        cj["diagonal"] = static_cast<bool>(cfg.diagonal[c]);
        cj["transpose"] = cfg.transpose_of[c];
        cj["in_adjacency"] = static_cast<bool>(cfg.in_adjacency[c]);
        classes.push_back(std::move(cj));
    }
    r["basis"] = std::move(classes);
    std::ostringstream table;
    table << "n: " << cfg.n << "\nclasses: " << cfg.num_classes << "\n";
    for (int c = 0; c < cfg.num_classes; ++c)
        table << "class " << c << ": size " << cfg.class_size[c]
              << (cfg.diagonal[c] ? " diagonal" : "") << (cfg.in_adjacency[c] ? " adjacency" : "")
              << " transpose " << cfg.transpose_of[c] << "\n";
    if (with_tensor) {
        StructureConstants sc = structure_constants(cfg);
        json tensor = json::array();
        for (int kk = 0; kk < sc.m; ++kk) {
            json plane = json::array();
            for (int i = 0; i < sc.m; ++i) {
                json row = json::array();
                for (int jj = 0; jj < sc.m; ++jj) row.push_back(sc.at(kk, i, jj));
                plane.push_back(std::move(row));
            }
            tensor.push_back(std::move(plane));
        }
        r["structure_constants"] = std::move(tensor);
        for (int kk = 0; kk < sc.m; ++kk)
            for (int i = 0; i < sc.m; ++i)
                for (int jj = 0; jj < sc.m; ++jj)
                    if (sc.at(kk, i, jj) != 0)
                        table << "p[" << kk << "][" << i << "][" << jj << "] = " << sc.at(kk, i, jj)
                              << "\n";
    }
    j["result"] = std::move(r);
    cli.emit(std::move(j), table.str());
}

void cmd_cellular_iso(Cli& cli, const std::string& a, const std::string& b) {
    Graph g = resolve_graph_arg(a), h = resolve_graph_arg(b);
    AlgebraIsoResult res = algebra_isomorphic_detail(g, h, cli.cfg.tuple_cap);
    if (res.divergence)
        throw internal_error("C^3 equivalence and structure-constant certification diverged");
    json j = cli.envelope("cellular iso");
    json r;
    r["algebra_isomorphic"] = res.isomorphic();
    r["c3_equivalent"] = res.c3_equivalent;
    r["certified"] = res.certified;
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "algebra isomorphic: " << (res.isomorphic() ? "true" : "false") << "\n";
    cli.emit(std::move(j), table.str());
    cli.exit_code = res.isomorphic() ? 0 : 1;
}

Census census_for(Cli& cli, int n, const std::string& import_path) {
    if (!import_path.empty()) {
        std::vector<Graph> imported = load_graph6_file(import_path);
        return build_census(n, &imported, cli.cfg.workers, cli.cfg.census_n_cap);
    }
    return build_census(n, nullptr, cli.cfg.workers, cli.cfg.census_n_cap);
}

void cmd_census_run(Cli& cli, int n, const std::string& import_path, const std::string& out_path) {
    Census census = census_for(cli, n, import_path);
    if (out_path.empty() || out_path == "-") {
        write_census_tsv(census, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open output file: " + out_path);
        write_census_tsv(census, out);
        std::cerr << census.entries.size() << " graphs written to " << out_path << "\n";
    }
}

void cmd_census_spectral(Cli& cli, int n, const std::string& import_path) {
    Census census = census_for(cli, n, import_path);
    SpectralSummary s = spectral_census(census);
    json j = cli.envelope("census spectral");
    json r;
    r["n"] = s.n;
    r["graphs"] = s.graph_count;
    r["ds_graphs"] = s.graph_count - [&] {
        std::size_t non_ds = 0;
        for (const auto& c : s.cospectral_classes) non_ds += c.members.size();
        return non_ds;
    }();
    r["spectral_classes"] = s.class_count;
    r["cospectral_classes"] = json::array();
    for (const auto& c : s.cospectral_classes) {
        json cj;
        CharPoly p;
        p.coeffs = c.charpoly;
        cj["charpoly"] = to_string(p);
        cj["members"] = c.members;
        r["cospectral_classes"].push_back(std::move(cj));
    }
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "n: " << s.n << "\ngraphs: " << s.graph_count << "\nspectral classes: " << s.class_count
          << "\nco-spectral classes (size >= 2): " << s.cospectral_classes.size() << "\n";
    for (const auto& c : s.cospectral_classes) {
        CharPoly p;
        p.coeffs = c.charpoly;
        table << "  " << to_string(p) << ":";
        for (const auto& m : c.members) table << " " << m;
        table << "\n";
    }
    cli.emit(std::move(j), table.str());
}

void cmd_census_scan(Cli& cli, int n, const std::string& import_path) {
    Census census = census_for(cli, n, import_path);
    ScanReport rep = cross_invariant_scan(census, cli.cfg.tuple_cap);
    json j = cli.envelope("census scan");
    json r;
    r["n"] = rep.n;
    r["graphs"] = rep.graph_count;
    r["pairs"] = rep.pair_count;
    json regions = json::object();
    for (int c = 0; c < 2; ++c)
        for (int w1 = 0; w1 < 2; ++w1)
            for (int w2 = 0; w2 < 2; ++w2) {
                std::string key = std::string(c ? "cospectral" : "noncospectral") + "_" +
                                  (w1 ? "wl1" : "nonwl1") + "_" + (w2 ? "wl2" : "nonwl2");
                regions[key] = rep.region_count[c][w1][w2];
            }
    r["regions"] = std::move(regions);
    r["cospectral_pairs"] = rep.cospectral_pairs();
    r["wl1_equivalent_pairs"] = rep.wl1_pairs();
    r["wl2_equivalent_pairs"] = rep.wl2_pairs();
    r["isomorphic_pairs"] = rep.isomorphic_pairs;
    r["hard_assertions"] = "2-WL equivalence implied co-spectrality on every pair";
    if (rep.cospectral_not_wl1_witness) {
        r["cospectral_not_c2_witness"] =
            json::array({rep.cospectral_not_wl1_witness->first, rep.cospectral_not_wl1_witness->second});
    }
    if (rep.wl1_not_cospectral_witness) {
        r["c2_not_cospectral_witness"] =
            json::array({rep.wl1_not_cospectral_witness->first, rep.wl1_not_cospectral_witness->second});
    }
    j["result"] = std::move(r);
    std::ostringstream table;
    table << "n: " << rep.n << "\ngraphs: " << rep.graph_count << "\npairs: " << rep.pair_count
          << "\nco-spectral pairs: " << rep.cospectral_pairs()
          << "\nC^2-equivalent pairs: " << rep.wl1_pairs()
          << "\n2-WL-equivalent pairs: " << rep.wl2_pairs() << "\n";
    if (rep.cospectral_not_wl1_witness)
        table << "co-spectral but not C^2-equivalent: " << rep.cospectral_not_wl1_witness->first
              << " vs " << rep.cospectral_not_wl1_witness->second << "\n";
    if (rep.wl1_not_cospectral_witness)
        table << "C^2-equivalent but not co-spectral: " << rep.wl1_not_cospectral_witness->first
              << " vs " << rep.wl1_not_cospectral_witness->second << "\n";
    cli.emit(std::move(j), table.str());
}

void cmd_verify(Cli& cli, int criterion) {
    AcceptanceSuite suite(cli.cfg);
    if (criterion > 0) {
        CriterionResult r = suite.run(criterion);
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        cli.exit_code = r.pass ? 0 : 1;
        return;
    }
    cli.exit_code = suite.run_all(std::cout) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Cli cli;
    apply_env_overrides(cli.cfg);
    std::function<void()> pending;  // leaf command, executed after config finalization

    CLI::App app{"exact graph spectra, counting logic and Weisfeiler-Leman toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("specwl ") + kVersion);

    std::string format = cli.cfg.format == OutputFormat::json ? "json" : "table";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--workers", cli.cfg.workers, "worker threads for the census enumerator");
    app.add_option("--seed", cli.cfg.seed, "seed for randomized property suites");
    app.add_option("--tuple-cap", cli.cfg.tuple_cap, "k-WL tuple budget");
    app.add_option("--ast-node-cap", cli.cfg.ast_node_cap, "formula builder node budget");
    app.add_option("--sympower-cap", cli.cfg.sympower_vertex_cap, "symmetric power vertex budget");
    app.add_option("--census-cap", cli.cfg.census_n_cap, "largest n for built-in enumeration");
    app.add_option("--config", cli.config_file, "key=value config file");

    // gen
    std::string gen_expr, gen_out;
    bool gen_edge_list = false;
    auto* gen = app.add_subcommand("gen", "build a graph and print it (graph6 by default)");
    gen->add_option("expr", gen_expr, "generator expression, file, or graph6")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_flag("--edge-list", gen_edge_list, "emit edge-list format instead of graph6");
    gen->callback([&] { pending = [&] { cmd_gen(cli, gen_expr, gen_out, gen_edge_list); }; });

    // spectrum
    std::string spec_graph;
    auto* spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial and float eigenvalues");
    spectrum->add_option("graph", spec_graph, "graph argument")->required();
    spectrum->callback([&] { pending = [&] { cmd_spectrum(cli, spec_graph); }; });

    // cospec
    std::string cospec_a, cospec_b;
    auto* cospec = app.add_subcommand("cospec", "exact co-spectrality decision (exit 0 iff co-spectral)");
    cospec->add_option("g1", cospec_a, "first graph")->required();
    cospec->add_option("g2", cospec_b, "second graph")->required();
    cospec->callback([&] { pending = [&] { cmd_cospec(cli, cospec_a, cospec_b); }; });

    // walks
    std::string walks_graph;
    int walks_v = 0, walks_u = 0;
    long walks_l = 0;
    auto* walks = app.add_subcommand("walks", "exact number of walks of length l from v to u");
    walks->add_option("graph", walks_graph)->required();
    walks->add_option("v", walks_v)->required();
    walks->add_option("u", walks_u)->required();
    walks->add_option("l", walks_l)->required();
    walks->callback([&] { pending = [&] { cmd_walks(cli, walks_graph, walks_v, walks_u, walks_l); }; });

    // logic
    auto* logic = app.add_subcommand("logic", "counting first-order logic over graphs");
    logic->require_subcommand(1);
    std::string le_graph, le_formula;
    auto* logic_eval = logic->add_subcommand("eval", "evaluate a sentence on a graph (exit 0 iff true)");
    logic_eval->add_option("graph", le_graph)->required();
    logic_eval->add_option("formula", le_formula)->required();
    logic_eval->callback([&] { pending = [&] { cmd_logic_eval(cli, le_graph, le_formula); }; });

    long psi_l = 1, psi_k = 0;
    auto* logic_psi = logic->add_subcommand("psi", "build the walk-count formula psi^l_k(x,y)");
    logic_psi->add_option("l", psi_l)->required();
    logic_psi->add_option("k", psi_k)->required();
    logic_psi->callback([&] { pending = [&] { cmd_logic_psi(cli, psi_l, psi_k, false); }; });

    long phi_l = 1, phi_k = 0;
    auto* logic_phi = logic->add_subcommand("phi", "build the closed-walk sentence phi^l_k");
    logic_phi->add_option("l", phi_l)->required();
    logic_phi->add_option("k", phi_k)->required();
    logic_phi->callback([&] { pending = [&] { cmd_logic_psi(cli, phi_l, phi_k, true); }; });

    int ext_r = 0, ext_s = 0;
    auto* logic_ext = logic->add_subcommand("ext-axiom", "build the extension axiom eta_{r,s}");
    logic_ext->add_option("r", ext_r)->required();
    logic_ext->add_option("s", ext_s)->required();
    logic_ext->callback([&] { pending = [&] { cmd_logic_ext_axiom(cli, ext_r, ext_s); }; });

    std::string ep_graph;
    int ep_k = 1;
    auto* logic_ep = logic->add_subcommand("ext-prop", "k-extension property (exit 0 iff it holds)");
    logic_ep->add_option("graph", ep_graph)->required();
    logic_ep->add_option("k", ep_k)->required();
    logic_ep->callback([&] { pending = [&] { cmd_logic_ext_prop(cli, ep_graph, ep_k); }; });

    // wl
    auto* wl = app.add_subcommand("wl", "Weisfeiler-Leman refinement");
    wl->require_subcommand(1);
    std::string wlr_graph;
    int wlr_k = 1;
    auto* wl_refine = wl->add_subcommand("refine", "stable k-WL coloring of one graph");
    wl_refine->add_option("graph", wlr_graph)->required();
    wl_refine->add_option("-k", wlr_k, "dimension (default 1)");
    wl_refine->callback([&] { pending = [&] { cmd_wl_refine(cli, wlr_graph, wlr_k); }; });

    std::string wle_a, wle_b;
    int wle_k = 1;
    auto* wl_equiv = wl->add_subcommand("equiv", "k-WL equivalence (exit 0 iff equivalent)");
    wl_equiv->add_option("g1", wle_a)->required();
    wl_equiv->add_option("g2", wle_b)->required();
    wl_equiv->add_option("-k", wle_k, "dimension (default 1)");
    wl_equiv->callback([&] { pending = [&] { cmd_wl_equiv(cli, wle_a, wle_b, wle_k); }; });

    // sympower
    auto* sympower = app.add_subcommand("sympower", "symmetric powers and k-walks");
    sympower->require_subcommand(1);
    std::string spb_graph;
    int spb_k = 1;
    auto* sp_build = sympower->add_subcommand("build", "emit graph6 of the k-th symmetric power");
    sp_build->add_option("graph", spb_graph)->required();
    sp_build->add_option("-k", spb_k, "subset size")->required();
    sp_build->callback([&] { pending = [&] { cmd_sympower_build(cli, spb_graph, spb_k); }; });

    std::string spw_graph;
    int spw_k = 1;
    long spw_l = 0;
    auto* sp_walks = sympower->add_subcommand("walks", "exact number of closed k-walks of length l");
    sp_walks->add_option("graph", spw_graph)->required();
    sp_walks->add_option("-k", spw_k, "subset size")->required();
    sp_walks->add_option("-l", spw_l, "walk length")->required();
    sp_walks->callback([&] { pending = [&] { cmd_sympower_walks(cli, spw_graph, spw_k, spw_l); }; });

    // cellular
    auto* cellular = app.add_subcommand("cellular", "coherent configurations / cellular algebras");
    cellular->require_subcommand(1);
    std::string cc_graph;
    bool cc_tensor = false;
    auto* cell_config = cellular->add_subcommand("config", "basis classes of the coherent configuration");
    cell_config->add_option("graph", cc_graph)->required();
    cell_config->add_flag("-p,--tensor", cc_tensor, "include the structure-constant tensor");
    cell_config->callback([&] { pending = [&] { cmd_cellular_config(cli, cc_graph, cc_tensor); }; });

    std::string ci_a, ci_b;
    auto* cell_iso = cellular->add_subcommand("iso", "cellular algebra isomorphism (exit 0 iff isomorphic)");
    cell_iso->add_option("g1", ci_a)->required();
    cell_iso->add_option("g2", ci_b)->required();
    cell_iso->callback([&] { pending = [&] { cmd_cellular_iso(cli, ci_a, ci_b); }; });

    // census
    auto* census = app.add_subcommand("census", "exhaustive small-graph census");
    census->require_subcommand(1);
    int cr_n = 0;
    std::string cr_import, cr_out;
    auto* census_run = census->add_subcommand("run", "enumerate one graph per isomorphism class");
    census_run->add_option("-n", cr_n, "vertex count")->required();
    census_run->add_option("--import", cr_import, "graph6 file for n beyond the built-in cap");
    census_run->add_option("-o,--output", cr_out, "output TSV (default stdout)");
    census_run->callback([&] { pending = [&] { cmd_census_run(cli, cr_n, cr_import, cr_out); }; });

    int cs_n = 0;
    std::string cs_import;
    auto* census_spectral = census->add_subcommand("spectral", "group the census by characteristic polynomial");
    census_spectral->add_option("-n", cs_n, "vertex count")->required();
    census_spectral->add_option("--import", cs_import, "graph6 file for n beyond the built-in cap");
    census_spectral->callback([&] { pending = [&] { cmd_census_spectral(cli, cs_n, cs_import); }; });

    int cn_n = 0;
    std::string cn_import;
    auto* census_scan = census->add_subcommand("scan", "pairwise cross-invariant report");
    census_scan->add_option("-n", cn_n, "vertex count")->required();
    census_scan->add_option("--import", cn_import, "graph6 file for n beyond the built-in cap");
    census_scan->callback([&] { pending = [&] { cmd_census_scan(cli, cn_n, cn_import); }; });

    // verify
    int verify_criterion = 0;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite (exit 0 iff all pass)");
    verify->add_option("--criterion", verify_criterion, "run a single criterion (1..10)");
    verify->callback([&] { pending = [&] { cmd_verify(cli, verify_criterion); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cli.cfg.format = format == "json" ? OutputFormat::json : OutputFormat::table;
        if (!cli.config_file.empty()) load_config_file(cli.cfg, cli.config_file);
        cli.cfg.validate();
        if (pending) pending();
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return cli.exit_code;
}
