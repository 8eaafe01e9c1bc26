#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eop/enumerate.hpp"
#include "eop/graph6.hpp"

namespace eop {

// All connected graphs with 1 <= n <= max_n, one representative per
// isomorphism class, grouped by n in certificate order.
inline std::vector<Graph> built_in_corpus(int max_n) {
    if (max_n < 3 || max_n > 7)
        throw std::invalid_argument("built-in corpus supports 3 <= max_n <= 7");
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : enumerate_connected_graphs(n)) corpus.push_back(std::move(g));
    return corpus;
}

// One graph6 record per line; blank lines and '#' comments are skipped.
inline std::vector<Graph> load_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t end = line.find_last_not_of(" \t");
        try {
            graphs.push_back(parse_graph6(line.substr(start, end - start + 1)));
        } catch (const std::exception& e) {
            throw std::invalid_argument("record " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

inline std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
    try {
        return load_graph6_stream(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// Edge-list format: "n; u v; u v; ...": vertex count, then one edge per
// semicolon-separated segment.  A trailing semicolon is allowed.
inline Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream split(text);
    while (std::getline(split, cur, ';')) parts.push_back(cur);

    auto blank = [](const std::string& s) {
        return s.find_first_not_of(" \t\r\n") == std::string::npos;
    };
    if (parts.empty() || blank(parts.front()))
        throw std::invalid_argument("edge list must start with the vertex count");

    int n = 0;
    {
        std::istringstream head(parts.front());
        std::string extra;
        if (!(head >> n) || (head >> extra))
            throw std::invalid_argument("bad vertex count: \"" + parts.front() + "\"");
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (blank(parts[i])) {
            if (i + 1 == parts.size()) break;  // trailing semicolon
            throw std::invalid_argument("empty edge segment");
        }
        std::istringstream seg(parts[i]);
        int u = 0, v = 0;
        std::string extra;
        if (!(seg >> u >> v) || (seg >> extra))
            throw std::invalid_argument("bad edge segment: \"" + parts[i] + "\"");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace eop
