#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eop {

struct Edge {
    int u;  // u < v
    int v;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

// Simple undirected graph on vertices 0..n-1.  Edges are stored sorted by
// (u,v); the index of an edge in edges() is its id throughout the library.
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
        std::vector<std::pair<int, int>> cleaned;
        cleaned.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw std::invalid_argument("self loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            cleaned.emplace_back(u, v);
        }
        std::sort(cleaned.begin(), cleaned.end());
        cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

        Graph g;
        g.n_ = n;
        g.row_words_ = (n + 63) / 64;
        g.bits_.assign(static_cast<size_t>(n) * g.row_words_, 0);
        g.adj_.assign(n, {});
        g.edges_.reserve(cleaned.size());
        for (auto [u, v] : cleaned) {
            g.edges_.push_back({u, v});
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
            g.bits_[static_cast<size_t>(u) * g.row_words_ + v / 64] |= 1ull << (v % 64);
            g.bits_[static_cast<size_t>(v) * g.row_words_ + u / 64] |= 1ull << (u % 64);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_.at(id); }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1ull;
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // -1 when the pair is not an edge
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        Edge probe{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                                   [](const Edge& a, const Edge& b) {
                                       return a.u != b.u ? a.u < b.u : a.v < b.v;
                                   });
        if (it == edges_.end() || !(*it == probe)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int row_words() const { return row_words_; }
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * row_words_; }

  private:
    int n_ = 0;
    int row_words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;  // adjacency rows, row_words_ words per vertex
};

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline int diameter(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("diameter needs at least one vertex");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter undefined on disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

namespace detail {

// does `vs` (candidate pool, as adjacency within g) contain an independent set of size k
inline bool has_independent_subset(const Graph& g, const std::vector<int>& pool, size_t idx,
                                   std::vector<int>& picked, int k) {
    if (static_cast<int>(picked.size()) == k) return true;
    if (picked.size() + (pool.size() - idx) < static_cast<size_t>(k)) return false;
    for (size_t i = idx; i < pool.size(); ++i) {
        int cand = pool[i];
        bool ok = true;
        for (int p : picked)
            if (g.adjacent(p, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        picked.push_back(cand);
        if (has_independent_subset(g, pool, i + 1, picked, k)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace detail

// true iff g contains K_{1,s} as an induced subgraph (a vertex with s pairwise
// non-adjacent neighbours)
inline bool contains_induced_star(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("star size must be >= 1");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < s) continue;
        std::vector<int> picked;
        if (detail::has_independent_subset(g, g.neighbors(v), 0, picked, s)) return true;
    }
    return false;
}

inline bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return n >= 1 && g.edge_count() == n * (n - 1) / 2;
}

// star K_{1,t}, t >= 1: some vertex adjacent to all others, m = n-1
inline bool is_star(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    return g.max_degree() == n - 1;
}

inline bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1 || !is_connected(g)) return false;
    int ends = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++ends;
    }
    return ends == 2;
}

inline bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// K_{1,m-1} with one edge subdivided, m >= 3: hub h of degree m-1, one degree-2
// vertex x on the subdivided edge, everything else a leaf.
inline bool is_once_subdivided_star(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (m < 3 || n != m + 1 || !is_connected(g)) return false;
    for (int h = 0; h < n; ++h) {
        if (g.degree(h) != m - 1) continue;
        int far = -1;  // the one vertex not adjacent to h
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v == h || g.adjacent(h, v)) continue;
            if (far >= 0) ok = false;
            far = v;
        }
        if (!ok || far < 0 || g.degree(far) != 1) continue;
        int x = g.neighbors(far)[0];
        if (g.degree(x) != 2 || !g.adjacent(x, h)) continue;
        bool leaves_ok = true;
        for (int v : g.neighbors(h))
            if (v != x && g.degree(v) != 1) {
                leaves_ok = false;
                break;
            }
        if (leaves_ok) return true;
    }
    return false;
}

enum class BasicShape { complete, star, once_subdivided_star, path, cycle, other };

inline const char* to_string(BasicShape s) {
    switch (s) {
        case BasicShape::complete: return "complete";
        case BasicShape::star: return "star";
        case BasicShape::once_subdivided_star: return "once_subdivided_star";
        case BasicShape::path: return "path";
        case BasicShape::cycle: return "cycle";
        default: return "other";
    }
}

// Fixed resolution order: complete, star, once_subdivided_star, path, cycle.
// P4 is reported as once_subdivided_star, K3 as complete, P3 as star.
inline BasicShape classify_basic_shape(const Graph& g) {
    if (is_complete(g)) return BasicShape::complete;
    if (is_star(g)) return BasicShape::star;
    if (is_once_subdivided_star(g)) return BasicShape::once_subdivided_star;
    if (is_path_graph(g)) return BasicShape::path;
    if (is_cycle_graph(g)) return BasicShape::cycle;
    return BasicShape::other;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;    // new vertex -> parent vertex
    std::vector<int> from_parent;  // parent vertex -> new vertex, -1 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    InducedSubgraph out;
    out.from_parent.assign(g.vertex_count(), -1);
    std::vector<int> sorted_vs = vs;
    std::sort(sorted_vs.begin(), sorted_vs.end());
    sorted_vs.erase(std::unique(sorted_vs.begin(), sorted_vs.end()), sorted_vs.end());
    for (int v : sorted_vs) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        out.from_parent[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < sorted_vs.size(); ++i)
        for (size_t j = i + 1; j < sorted_vs.size(); ++j)
            if (g.adjacent(sorted_vs[i], sorted_vs[j]))
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.graph = Graph::from_edges(static_cast<int>(sorted_vs.size()), std::move(es));
    return out;
}

struct EdgeInducedSubgraph {
    Graph graph;
    std::vector<int> vertex_to_parent;
    std::vector<int> edge_to_parent;  // new edge id -> parent edge id
};

// subgraph whose vertices are the endpoints of `edge_ids` and whose edges are
// exactly `edge_ids` (not the induced closure)
inline EdgeInducedSubgraph edge_induced_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> verts;
    for (int id : ids) {
        if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("edge id out of range");
        verts.push_back(g.edge(id).u);
        verts.push_back(g.edge(id).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    EdgeInducedSubgraph out;
    std::vector<int> from_parent(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        from_parent[verts[i]] = static_cast<int>(i);
        out.vertex_to_parent.push_back(verts[i]);
    }
    std::vector<std::pair<int, int>> es;
    for (int id : ids) es.emplace_back(from_parent[g.edge(id).u], from_parent[g.edge(id).v]);
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), std::move(es));
    for (const Edge& e : out.graph.edges()) {
        int pu = out.vertex_to_parent[e.u], pv = out.vertex_to_parent[e.v];
        out.edge_to_parent.push_back(g.edge_id(pu, pv));
    }
    return out;
}

// disjoint union, vertices of b shifted past a
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : a.edges()) es.emplace_back(e.u, e.v);
    int off = a.vertex_count();
    for (const Edge& e : b.edges()) es.emplace_back(e.u + off, e.v + off);
    return Graph::from_edges(off + b.vertex_count(), std::move(es));
}

}  // namespace eop
