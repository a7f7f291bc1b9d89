#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "specwl/errors.hpp"
#include "specwl/graph.hpp"

namespace specwl {

// graph6: printable ASCII encoding of an undirected graph. A size header is
// followed by the upper triangle of the adjacency matrix in column-major order
// ((0,1),(0,2),(1,2),(0,3),...), packed 6 bits per byte MSB-first, each byte
// offset by 63. No ">>graph6<<" prefix, no trailing newline.

namespace detail {

inline int g6_byte(const std::string& s, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 byte", i);
    return c - 63;
}

} // namespace detail

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);

    std::size_t pos = 0;
    long long n;
    if (detail::g6_byte(text, 0) != 63) {
        n = detail::g6_byte(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && detail::g6_byte(text, 1) != 63) {
        if (text.size() < 4) throw parse_error("truncated graph6 size header", text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_byte(text, i);
        pos = 4;
    } else {
        if (text.size() < 8) throw parse_error("truncated graph6 size header", text.size());
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | detail::g6_byte(text, i);
        pos = 8;
    }
    if (n > 100'000) throw resource_error("graph6 vertex count too large: " + std::to_string(n));

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() < pos + body) throw parse_error("truncated graph6 bit body", text.size());
    if (text.size() > pos + body) throw parse_error("trailing data after graph6 body", pos + body);

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = detail::g6_byte(text, pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero for the encoding to round-trip bit-exactly.
    for (std::size_t b = bits; b < body * 6; ++b) {
        int byte = detail::g6_byte(text, pos + b / 6);
        if ((byte >> (5 - b % 6)) & 1) throw parse_error("nonzero graph6 padding bit", pos + b / 6);
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

/// Edge-list text format: first non-blank line is the vertex count, each
/// following non-blank line one "u v" pair. '#' starts a comment.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;  // skip blank leading lines
            std::string rest;
            if (ls >> rest)
                throw input_error("edge list line " + std::to_string(lineno) +
                                  ": expected vertex count alone");
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v))
            throw input_error("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        std::string rest;
        if (ls >> rest)
            throw input_error("edge list line " + std::to_string(lineno) + ": trailing data");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw input_error("edge list: missing vertex count line");
    return from_edges(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace specwl
