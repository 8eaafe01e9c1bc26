#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

// Edges d1 and d2 have a common edge when some third edge joins an endpoint of
// d1 to an endpoint of d2.  A set of edges is an edge open packing (EOP set)
// when no two of its members have a common edge.

// witness (if non-null) receives the id of one common edge
inline bool have_common_edge(const Graph& g, int e1, int e2, int* witness = nullptr) {
    if (e1 < 0 || e1 >= g.edge_count() || e2 < 0 || e2 >= g.edge_count())
        throw std::invalid_argument("edge id out of range");
    const Edge a = g.edge(e1), b = g.edge(e2);
    for (int p : {a.u, a.v})
        for (int q : {b.u, b.v}) {
            if (p == q || !g.adjacent(p, q)) continue;
            int id = g.edge_id(p, q);
            if (id == e1 || id == e2) continue;
            if (witness) *witness = id;
            return true;
        }
    return false;
}

// conflict graph: one vertex per host edge, adjacent iff the edges have a
// common edge in the host.  EOP sets of the host are exactly the independent
// sets of this graph.
inline Graph conflict_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (have_common_edge(g, i, j)) es.emplace_back(i, j);
    return Graph::from_edges(m, std::move(es));
}

struct EopViolation {
    int e1, e2;       // members with a common edge
    int common_edge;  // id of the connecting edge
};

namespace detail {
inline void require_edge_ids(const Graph& g, const std::vector<int>& edges) {
    std::vector<int> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge id in set");
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.edge_count()))
        throw std::invalid_argument("edge id out of range");
}
}  // namespace detail

inline bool is_eop_set(const Graph& g, const std::vector<int>& edges,
                       EopViolation* violation = nullptr) {
    detail::require_edge_ids(g, edges);
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            int w = -1;
            if (have_common_edge(g, edges[i], edges[j], &w)) {
                if (violation) *violation = {edges[i], edges[j], w};
                return false;
            }
        }
    return true;
}

inline std::vector<int> saturated_vertices(const Graph& g, const std::vector<int>& edges) {
    std::vector<int> vs;
    for (int id : edges) {
        vs.push_back(g.edge(id).u);
        vs.push_back(g.edge(id).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

struct NotDisjointStarsError : std::runtime_error {
    explicit NotDisjointStarsError(const std::string& what) : std::runtime_error(what) {}
};

struct StarComponent {
    int centre;                      // first admissible centre
    std::vector<int> leaves;         // the other endpoints
    std::vector<int> centre_choices; // both endpoints for a single-edge star
};

struct StarDecomposition {
    std::vector<StarComponent> components;
    std::vector<int> shape;  // leaf counts, sorted ascending
};

// Decompose the subgraph induced by the saturated vertices of an EOP set into
// disjoint stars.  For a valid EOP set this always succeeds; any non-star
// component raises NotDisjointStarsError.  Single-edge components admit either
// endpoint as centre, and centre_choices lists both.
inline StarDecomposition star_decomposition(const Graph& g, const std::vector<int>& edges) {
    detail::require_edge_ids(g, edges);
    std::vector<int> verts = saturated_vertices(g, edges);
    std::vector<int> comp_of(g.vertex_count(), -1);
    std::vector<std::vector<int>> comps;
    for (int s : verts) {
        if (comp_of[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.push_back({});
        std::vector<int> stack{s};
        comp_of[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps[id].push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp_of[w] >= 0 || !std::binary_search(verts.begin(), verts.end(), w)) continue;
                comp_of[w] = id;
                stack.push_back(w);
            }
        }
    }

    StarDecomposition out;
    for (auto& comp : comps) {
        std::sort(comp.begin(), comp.end());
        int edges_inside = 0;
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (g.adjacent(comp[i], comp[j])) ++edges_inside;
        int want = static_cast<int>(comp.size()) - 1;
        StarComponent sc;
        if (comp.size() == 2) {
            sc.centre = comp[0];
            sc.leaves = {comp[1]};
            sc.centre_choices = {comp[0], comp[1]};
        } else {
            int centre = -1;
            for (int v : comp) {
                int deg_inside = 0;
                for (int w : comp)
                    if (w != v && g.adjacent(v, w)) ++deg_inside;
                if (deg_inside == want) centre = v;
            }
            if (centre < 0 || edges_inside != want)
                throw NotDisjointStarsError("component of size " + std::to_string(comp.size()) +
                                            " is not a star");
            sc.centre = centre;
            for (int v : comp)
                if (v != centre) sc.leaves.push_back(v);
            sc.centre_choices = {centre};
        }
        out.components.push_back(std::move(sc));
    }
    for (const auto& sc : out.components) out.shape.push_back(static_cast<int>(sc.leaves.size()));
    std::sort(out.shape.begin(), out.shape.end());
    return out;
}

namespace detail {

inline void enum_sets_rec(const Graph& conflicts, int m, int next, std::vector<int>& cur,
                          int want, const std::function<void(const std::vector<int>&)>& emit,
                          bool need_disjoint, const Graph& host) {
    if (want >= 0 && static_cast<int>(cur.size()) == want) {
        emit(cur);
        return;
    }
    if (want < 0 && !cur.empty()) emit(cur);
    for (int e = next; e < m; ++e) {
        if (want >= 0 && static_cast<int>(cur.size()) + (m - e) < want) break;
        bool ok = true;
        for (int d : cur) {
            if (conflicts.adjacent(d, e)) {
                ok = false;
                break;
            }
            if (need_disjoint) {
                const Edge a = host.edge(d), b = host.edge(e);
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        cur.push_back(e);
        enum_sets_rec(conflicts, m, e + 1, cur, want, emit, need_disjoint, host);
        cur.pop_back();
    }
}

}  // namespace detail

// all EOP sets of exactly `size` edges, in ascending lexicographic edge-id order
inline std::vector<std::vector<int>> enumerate_eop_sets(const Graph& g, int size,
                                                        const Graph* conflicts = nullptr) {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    Graph local;
    if (!conflicts) {
        local = conflict_graph(g);
        conflicts = &local;
    }
    std::vector<std::vector<int>> out;
    if (size == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    detail::enum_sets_rec(*conflicts, g.edge_count(), 0, cur, size,
                          [&](const std::vector<int>& s) { out.push_back(s); }, false, g);
    return out;
}

// every nonempty EOP set, any size (used by invariant checks)
inline void for_each_eop_set(const Graph& g, const std::function<void(const std::vector<int>&)>& fn,
                             const Graph* conflicts = nullptr) {
    Graph local;
    if (!conflicts) {
        local = conflict_graph(g);
        conflicts = &local;
    }
    std::vector<int> cur;
    detail::enum_sets_rec(*conflicts, g.edge_count(), 0, cur, -1, fn, false, g);
}

// induced matchings = EOP sets whose members are pairwise vertex-disjoint
inline std::vector<std::vector<int>> enumerate_induced_matchings(const Graph& g, int size,
                                                                 const Graph* conflicts = nullptr) {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    Graph local;
    if (!conflicts) {
        local = conflict_graph(g);
        conflicts = &local;
    }
    std::vector<std::vector<int>> out;
    if (size == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    detail::enum_sets_rec(*conflicts, g.edge_count(), 0, cur, size,
                          [&](const std::vector<int>& s) { out.push_back(s); }, true, g);
    return out;
}

}  // namespace eop
