#pragma once

// DIMACS edge format: comment lines "c ...", one "p edge <n> <m>" line,
// then m lines "e <u> <v>" with 1-based vertex indices. Input tolerates
// CRLF and blank lines; output is canonical (sorted edges, LF).

#include <sstream>
#include <string>
#include <vector>

#include "hcdual/errors.hpp"
#include "hcdual/graph.hpp"

namespace hcdual {

inline Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    bool have_p = false;
    long long n = 0, m = 0;
    long long edge_lines = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_p) throw parse_error("duplicate 'p' line", lineno);
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw parse_error("malformed 'p' line, expected 'p edge <n> <m>'", lineno);
            if (n < 0 || m < 0) throw parse_error("negative counts in 'p' line", lineno);
            have_p = true;
            continue;
        }
        if (tag == "e") {
            if (!have_p) throw parse_error("'e' line before 'p' line", lineno);
            long long u, v;
            if (!(ls >> u >> v)) throw parse_error("malformed 'e' line", lineno);
            if (u < 1 || u > n || v < 1 || v > n) throw parse_error("vertex out of range", lineno);
            if (u == v) throw parse_error("self-loop", lineno);
            ++edge_lines;
            edges.emplace_back((int)u - 1, (int)v - 1);
            continue;
        }
        throw parse_error("unrecognized line type '" + tag + "'", lineno);
    }
    if (!have_p) throw parse_error("missing 'p' line");
    if (edge_lines != m)
        throw parse_error("edge count mismatch: 'p' line declares " + std::to_string(m) +
                          " edges, found " + std::to_string(edge_lines) + " 'e' lines");
    return Graph((int)n, edges); // duplicate edge lines collapse in the adjacency
}

inline std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// FNV-1a over the canonical DIMACS bytes; stable instance fingerprint.
inline std::string content_hash(const Graph& g) {
    std::string bytes = emit_dimacs(g);
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string("fnv1a64:") + buf;
}

} // namespace hcdual
