#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

// Certificate layout: byte 0 is n, then the upper triangle of the relabeled
// adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// MSB-first, 8 bits per byte.  Certificates are equal iff the graphs are
// isomorphic; the byte string is the lexicographic minimum over the labelings
// the search visits.
struct CanonicalForm {
    std::vector<uint8_t> cert;
    std::vector<int> labeling;  // labeling[new_index] = original vertex
};

namespace detail {

class CanonSearch {
  public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()), W_(g.row_words()) {}

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) {
            out.cert = {0};
            return out;
        }
        std::vector<std::vector<int>> cells(1);
        for (int v = 0; v < n_; ++v) cells[0].push_back(v);
        refine(cells);
        recurse(cells);
        out.cert.reserve(1 + best_.size());
        out.cert.push_back(static_cast<uint8_t>(n_));
        out.cert.insert(out.cert.end(), best_.begin(), best_.end());
        out.labeling = best_label_;
        return out;
    }

  private:
    // equitable refinement: split every cell by the vector of neighbour counts
    // against all current cells, sub-cells ordered by count vector
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            size_t k = cells.size();
            std::vector<std::vector<uint64_t>> masks(k, std::vector<uint64_t>(W_, 0));
            for (size_t c = 0; c < k; ++c)
                for (int v : cells[c]) masks[c][v / 64] |= 1ull << (v % 64);
            std::vector<std::vector<int>> out;
            out.reserve(k);
            for (size_t c = 0; c < k; ++c) {
                if (cells[c].size() == 1) {
                    out.push_back(cells[c]);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cells[c].size());
                for (int v : cells[c]) {
                    std::vector<int> key(k);
                    const uint64_t* row = g_.row(v);
                    for (size_t d = 0; d < k; ++d) {
                        int cnt = 0;
                        for (int w = 0; w < W_; ++w)
                            cnt += std::popcount(row[w] & masks[d][w]);
                        key[d] = cnt;
                    }
                    keyed.emplace_back(std::move(key), v);
                }
                std::sort(keyed.begin(), keyed.end());
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> cell;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        cell.push_back(keyed[j++].second);
                    if (cell.size() != cells[c].size()) changed = true;
                    out.push_back(std::move(cell));
                    i = j;
                }
            }
            cells = std::move(out);
        }
    }

    // transposition (u v) is an automorphism iff their rows agree outside {u,v}
    bool twins(int u, int v) const {
        const uint64_t* ru = g_.row(u);
        const uint64_t* rv = g_.row(v);
        for (int w = 0; w < W_; ++w) {
            uint64_t diff = ru[w] ^ rv[w];
            if (w == u / 64) diff &= ~(1ull << (u % 64));
            if (w == v / 64) diff &= ~(1ull << (v % 64));
            if (diff) return false;
        }
        return true;
    }

    void recurse(const std::vector<std::vector<int>>& cells) {
        int target = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            emit_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (int u : tried)
                if (twins(u, v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != target) {
                    next.push_back(cells[c]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int u : cells[c])
                    if (u != v) rest.push_back(u);
                next.push_back(std::move(rest));
            }
            refine(next);
            recurse(next);
        }
    }

    void emit_leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i) perm[i] = cells[i][0];
        std::vector<uint8_t> bits((static_cast<size_t>(n_) * (n_ - 1) / 2 + 7) / 8, 0);
        size_t k = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (g_.adjacent(perm[i], perm[j])) bits[k / 8] |= 0x80u >> (k % 8);
                ++k;
            }
        if (!have_best_ || bits < best_) {
            best_ = std::move(bits);
            best_label_ = std::move(perm);
            have_best_ = true;
        }
    }

    const Graph& g_;
    int n_, W_;
    bool have_best_ = false;
    std::vector<uint8_t> best_;
    std::vector<int> best_label_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::CanonSearch(g).run(); }

inline Graph canonical_graph(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    std::vector<int> pos(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) pos[cf.labeling[i]] = i;
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edge_count());
    for (const Edge& e : g.edges()) es.emplace_back(pos[e.u], pos[e.v]);
    return Graph::from_edges(g.vertex_count(), std::move(es));
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a).cert == canonical_form(b).cert;
}

}  // namespace eop
