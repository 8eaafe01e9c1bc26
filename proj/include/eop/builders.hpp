#pragma once

#include <utility>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

// incremental edge-list builder used by the family constructions
class GraphBuilder {
  public:
    int add_vertex() { return n_++; }

    int add_path(int len_vertices) {  // returns first vertex of the new path
        int first = n_;
        for (int i = 0; i < len_vertices; ++i) add_vertex();
        for (int i = 0; i + 1 < len_vertices; ++i) add_edge(first + i, first + i + 1);
        return first;
    }

    int add_cycle(int len) {
        int first = n_;
        for (int i = 0; i < len; ++i) add_vertex();
        for (int i = 0; i < len; ++i) add_edge(first + i, first + (i + 1) % len);
        return first;
    }

    void add_edge(int u, int v) { es_.emplace_back(u, v); }

    // `count` new leaves adjacent to `at`; returns id of the first one
    int add_pendants(int at, int count) {
        int first = n_;
        for (int i = 0; i < count; ++i) {
            int leaf = add_vertex();
            add_edge(at, leaf);
        }
        return first;
    }

    // path of `edges` new edges hanging from `at`; returns the far endpoint
    int attach_path(int at, int edges) {
        int prev = at;
        for (int i = 0; i < edges; ++i) {
            int next = add_vertex();
            add_edge(prev, next);
            prev = next;
        }
        return prev;
    }

    int vertex_count() const { return n_; }
    Graph build() const { return Graph::from_edges(n_, es_); }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> es_;
};

inline Graph path_graph(int n) {
    GraphBuilder b;
    b.add_path(n);
    return b.build();
}

inline Graph cycle_graph(int n) {
    GraphBuilder b;
    b.add_cycle(n);
    return b.build();
}

// K_{1,t}: hub 0, leaves 1..t
inline Graph star_graph(int t) {
    GraphBuilder b;
    int hub = b.add_vertex();
    b.add_pendants(hub, t);
    return b.build();
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, std::move(es));
}

}  // namespace eop
