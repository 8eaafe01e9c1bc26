#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "eop/graph.hpp"

namespace eop {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// graph6 encoding for 0 <= n <= 62: byte 0 is n+63, then the upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups
// (zero padded), each emitted as group+63.
inline std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6 output limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw ParseError("empty graph6 string");
    for (char c : line)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("graph6 character out of range 63..126");
    if (line[0] == 126) throw ParseError("graph6 extended size header not supported");
    int n = line[0] - 63;
    size_t need = 1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() != need)
        throw ParseError("graph6 string has length " + std::to_string(line.size()) + ", expected " +
                         std::to_string(need) + " for n=" + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    size_t pos = 1;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = line[pos++] - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) es.emplace_back(i, j);
            --nbits;
        }
    return Graph::from_edges(n, std::move(es));
}

}  // namespace eop
