#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "specwl/errors.hpp"

namespace specwl {

enum class OutputFormat { json, table };

/// Process-wide resource budgets and reproducibility knobs. Every CLI report
/// echoes the active config so a run can be replayed exactly.
struct RunConfig {
    std::uint64_t tuple_cap = 10'000'000;         // k-WL budget on n^k tuples
    std::uint64_t ast_node_cap = 1'000'000;       // formula builder node budget
    std::uint64_t sympower_vertex_cap = 100'000;  // C(n,k) vertex budget
    int census_n_cap = 7;                         // built-in enumerator limit
    int workers = 1;
    std::uint64_t seed = 0x5eed;                  // randomized property suites
    OutputFormat format = OutputFormat::json;

    void validate() const {
        if (tuple_cap == 0 || ast_node_cap == 0 || sympower_vertex_cap == 0)
            throw input_error("resource budgets must be positive");
        if (census_n_cap < 1) throw input_error("census_n_cap must be positive");
        if (workers < 1) throw input_error("workers must be positive");
    }
};

namespace detail {

inline bool config_set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto as_u64 = [&](const std::string& v) -> std::uint64_t {
        std::size_t pos = 0;
        unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size()) throw input_error("bad numeric value for " + key + ": " + v);
        return x;
    };
    if (key == "tuple_cap") cfg.tuple_cap = as_u64(value);
    else if (key == "ast_node_cap") cfg.ast_node_cap = as_u64(value);
    else if (key == "sympower_vertex_cap") cfg.sympower_vertex_cap = as_u64(value);
    else if (key == "census_n_cap") cfg.census_n_cap = static_cast<int>(as_u64(value));
    else if (key == "workers") cfg.workers = static_cast<int>(as_u64(value));
    else if (key == "seed") cfg.seed = as_u64(value);
    else if (key == "format") {
        if (value == "json") cfg.format = OutputFormat::json;
        else if (value == "table") cfg.format = OutputFormat::table;
        else throw input_error("format must be json or table, got: " + value);
    } else {
        return false;
    }
    return true;
}

} // namespace detail

/// Applies SPECWL_* environment overrides (SPECWL_TUPLE_CAP, SPECWL_AST_NODE_CAP,
/// SPECWL_SYMPOWER_VERTEX_CAP, SPECWL_CENSUS_N_CAP, SPECWL_WORKERS, SPECWL_SEED,
/// SPECWL_FORMAT).
inline void apply_env_overrides(RunConfig& cfg) {
    static const char* keys[] = {"tuple_cap",    "ast_node_cap", "sympower_vertex_cap",
                                 "census_n_cap", "workers",      "seed",
                                 "format"};
    for (const char* key : keys) {
        std::string env_name = "SPECWL_";
        for (const char* p = key; *p; ++p) env_name += static_cast<char>(std::toupper(*p));
        if (const char* v = std::getenv(env_name.c_str())) detail::config_set_key(cfg, key, v);
    }
}

/// Reads a key=value config file (one pair per line, '#' comments).
inline void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (!detail::config_set_key(cfg, key, value))
            throw input_error(path + ":" + std::to_string(lineno) + ": unknown key: " + key);
    }
}

} // namespace specwl
