#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "eop/canonical.hpp"
#include "eop/graph.hpp"

namespace eop {

namespace detail {

// pair index k (column order) -> (i,j); mask bit k set means edge (i,j)
inline std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> t;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) t.emplace_back(i, j);
    return t;
}

inline bool mask_connected(int n, uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 1) return true;
    uint8_t rows[8] = {0};
    for (size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1u) {
            rows[pairs[k].first] |= uint8_t(1u << pairs[k].second);
            rows[pairs[k].second] |= uint8_t(1u << pairs[k].first);
        }
    uint8_t seen = 1, frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= rows[v];
        frontier = next & uint8_t(~seen);
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

// cert bits repacked so that ascending numeric order equals lexicographic
// certificate order: pair k lands at significance pair_count-1-k
inline uint32_t cert_to_ordered_mask(const std::vector<uint8_t>& cert, int pair_count) {
    uint32_t mask = 0;
    for (int k = 0; k < pair_count; ++k)
        if (cert[1 + k / 8] & (0x80u >> (k % 8))) mask |= 1u << (pair_count - 1 - k);
    return mask;
}

}  // namespace detail

struct EnumerationResult {
    std::vector<Graph> graphs;    // connected, pairwise non-isomorphic, certificate order
    uint64_t labeled_connected;   // number of labeled connected graphs on n vertices
};

// All connected graphs on exactly n vertices, 1 <= n <= 7, up to isomorphism:
// sweep the 2^C(n,2) labeled graphs and deduplicate by canonical certificate.
inline EnumerationResult enumerate_connected_graphs_detailed(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumeration supported for 1 <= n <= 7");
    auto pairs = detail::pair_table(n);
    int P = static_cast<int>(pairs.size());
    std::set<uint32_t> canon_masks;
    uint64_t labeled = 0;
    for (uint64_t mask = 0; mask < (1ull << P); ++mask) {
        if (!detail::mask_connected(n, static_cast<uint32_t>(mask), pairs)) continue;
        ++labeled;
        std::vector<std::pair<int, int>> es;
        for (int k = 0; k < P; ++k)
            if ((mask >> k) & 1u) es.push_back(pairs[k]);
        Graph g = Graph::from_edges(n, std::move(es));
        canon_masks.insert(detail::cert_to_ordered_mask(canonical_form(g).cert, P));
    }
    EnumerationResult out;
    out.labeled_connected = labeled;
    for (uint32_t cm : canon_masks) {
        std::vector<std::pair<int, int>> es;
        for (int k = 0; k < P; ++k)
            if ((cm >> (P - 1 - k)) & 1u) es.push_back(pairs[k]);
        out.graphs.push_back(Graph::from_edges(n, std::move(es)));
    }
    return out;
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
    return enumerate_connected_graphs_detailed(n).graphs;
}

}  // namespace eop
