#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "eop/packing.hpp"

namespace eop {

struct EdgeColoring {
    int chi = 0;
    std::vector<int> colors;  // colors[edge id] in 0..chi-1
};

namespace detail {

inline bool k_colorable(const Graph& conflicts, int k, std::vector<int>& colors) {
    int m = conflicts.vertex_count();
    colors.assign(m, -1);
    int colored = 0, max_used = -1;

    auto rec = [&](auto&& self) -> bool {
        if (colored == m) return true;
        // DSATUR order: most distinct neighbour colors, then degree, then id
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < m; ++v) {
            if (colors[v] >= 0) continue;
            std::set<int> seen;
            for (int w : conflicts.neighbors(v))
                if (colors[w] >= 0) seen.insert(colors[w]);
            int sat = static_cast<int>(seen.size());
            if (pick < 0 || sat > pick_sat ||
                (sat == pick_sat && conflicts.degree(v) > conflicts.degree(pick))) {
                pick = v;
                pick_sat = sat;
            }
        }
        int limit = std::min(k - 1, max_used + 1);  // new colors are interchangeable
        for (int c = 0; c <= limit; ++c) {
            bool free = true;
            for (int w : conflicts.neighbors(pick))
                if (colors[w] == c) {
                    free = false;
                    break;
                }
            if (!free) continue;
            colors[pick] = c;
            ++colored;
            int prev_max = max_used;
            max_used = std::max(max_used, c);
            if (self(self)) return true;
            colors[pick] = -1;
            --colored;
            max_used = prev_max;
        }
        return false;
    };
    return rec(rec);
}

// greedy clique gives a lower bound for the chromatic number
inline int greedy_clique(const Graph& conflicts) {
    int m = conflicts.vertex_count();
    if (m == 0) return 0;
    int seed = 0;
    for (int v = 1; v < m; ++v)
        if (conflicts.degree(v) > conflicts.degree(seed)) seed = v;
    std::vector<int> clique{seed};
    for (int v = 0; v < m; ++v) {
        if (v == seed) continue;
        bool ok = true;
        for (int c : clique)
            if (!conflicts.adjacent(v, c)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

inline int greedy_coloring(const Graph& conflicts, std::vector<int>& colors) {
    int m = conflicts.vertex_count();
    colors.assign(m, -1);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return conflicts.degree(a) > conflicts.degree(b); });
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(m + 1, 0);
        for (int w : conflicts.neighbors(v))
            if (colors[w] >= 0) taken[colors[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace detail

// Injective chromatic index: chromatic number of the conflict graph, found by
// iterative deepening between a greedy clique lower bound and a greedy
// coloring upper bound.
inline EdgeColoring injective_chromatic_index(const Graph& g, int guard_m = 24,
                                              const Graph* conflicts = nullptr) {
    int m = g.edge_count();
    if (m < 1) throw std::invalid_argument("injective chromatic index needs at least one edge");
    if (m > guard_m)
        throw std::invalid_argument("coloring guard: m=" + std::to_string(m) + " exceeds " +
                                    std::to_string(guard_m));
    Graph local;
    if (!conflicts) {
        local = conflict_graph(g);
        conflicts = &local;
    }
    EdgeColoring out;
    std::vector<int> greedy;
    int ub = detail::greedy_coloring(*conflicts, greedy);
    int lb = std::max(detail::greedy_clique(*conflicts), 1);
    for (int k = lb; k < ub; ++k) {
        std::vector<int> colors;
        if (detail::k_colorable(*conflicts, k, colors)) {
            out.chi = k;
            out.colors = std::move(colors);
            return out;
        }
    }
    out.chi = ub;
    out.colors = std::move(greedy);
    return out;
}

}  // namespace eop
