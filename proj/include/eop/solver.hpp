#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eop/packing.hpp"

namespace eop {

namespace detail {

// maximum independent set search over a conflict graph, dense bitset rows
class MisSolver {
  public:
    explicit MisSolver(const Graph& conflicts) : m_(conflicts.vertex_count()) {
        W_ = std::max((m_ + 63) / 64, 1);
        rows_.assign(static_cast<size_t>(m_) * W_, 0);
        for (int v = 0; v < m_; ++v)
            for (int w : conflicts.neighbors(v)) set_bit(row(v), w);
    }

    // size of a maximum independent set within candidate pool P
    int max_size(const std::vector<uint64_t>& pool) {
        best_ = 0;
        target_ = -1;
        expand(pool, 0);
        return best_;
    }

    // exact feasibility: does the pool contain an independent set of size k
    bool at_least(const std::vector<uint64_t>& pool, int k) {
        if (k <= 0) return true;
        best_ = 0;
        target_ = k;
        expand(pool, 0);
        return best_ >= k;
    }

    std::vector<uint64_t> full_pool() const {
        std::vector<uint64_t> p(W_, 0);
        for (int v = 0; v < m_; ++v) set_bit(p.data(), v);
        return p;
    }

    std::vector<uint64_t> empty_pool() const { return std::vector<uint64_t>(W_, 0); }

    uint64_t* row(int v) { return rows_.data() + static_cast<size_t>(v) * W_; }
    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * W_; }
    int words() const { return W_; }

    static void set_bit(uint64_t* p, int v) { p[v / 64] |= 1ull << (v % 64); }
    static bool test_bit(const uint64_t* p, int v) { return (p[v / 64] >> (v % 64)) & 1ull; }

  private:
    int pop(const std::vector<uint64_t>& p) const {
        int c = 0;
        for (uint64_t w : p) c += std::popcount(w);
        return c;
    }

    int degree_in(const std::vector<uint64_t>& pool, int v) const {
        int c = 0;
        const uint64_t* r = row(v);
        for (int w = 0; w < W_; ++w) c += std::popcount(r[w] & pool[w]);
        return c;
    }

    // greedy clique cover of the pool; the number of cliques bounds the
    // independence number from above
    int clique_cover_bound(const std::vector<uint64_t>& pool) const {
        std::vector<std::vector<uint64_t>> cliques;
        for (int w = 0; w < W_; ++w) {
            uint64_t bits = pool[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                bool placed = false;
                for (auto& c : cliques) {
                    bool all_adjacent = true;
                    const uint64_t* r = row(v);
                    for (int x = 0; x < W_; ++x)
                        if (c[x] & ~r[x]) {
                            all_adjacent = false;
                            break;
                        }
                    if (all_adjacent) {
                        set_bit(c.data(), v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    cliques.emplace_back(W_, 0);
                    set_bit(cliques.back().data(), v);
                }
            }
        }
        return static_cast<int>(cliques.size());
    }

    void expand(const std::vector<uint64_t>& pool, int have) {
        if (have > best_) best_ = have;
        if (target_ > 0 && best_ >= target_) return;
        int remaining = pop(pool);
        if (remaining == 0) return;
        if (have + remaining <= best_) return;
        if (have + clique_cover_bound(pool) <= best_) return;

        // branch on the vertex with the most conflicts inside the pool
        int v = -1, vdeg = -1;
        for (int w = 0; w < W_; ++w) {
            uint64_t bits = pool[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int d = degree_in(pool, u);
                if (d > vdeg) {
                    vdeg = d;
                    v = u;
                }
            }
        }

        std::vector<uint64_t> in_pool(pool);
        const uint64_t* r = row(v);
        for (int w = 0; w < W_; ++w) in_pool[w] &= ~r[w];
        in_pool[v / 64] &= ~(1ull << (v % 64));
        expand(in_pool, have + 1);
        if (target_ > 0 && best_ >= target_) return;

        std::vector<uint64_t> out_pool(pool);
        out_pool[v / 64] &= ~(1ull << (v % 64));
        expand(out_pool, have);
    }

    int m_;
    int W_ = 1;
    std::vector<uint64_t> rows_;
    int best_ = 0;
    int target_ = -1;
};

}  // namespace detail

struct EopNumber {
    int rho = 0;
    std::vector<int> witness;  // lexicographically least maximum EOP set
};

// Exact edge open packing number: maximum independent set of the conflict
// graph by branch and bound (greedy clique cover bound, branching on the
// highest-conflict-degree edge).  The witness is the lexicographically least
// maximum EOP set by edge id, rebuilt with exact feasibility probes.
inline EopNumber eop_number_exact(const Graph& g, const Graph* conflicts = nullptr) {
    Graph local;
    if (!conflicts) {
        local = conflict_graph(g);
        conflicts = &local;
    }
    EopNumber out;
    int m = g.edge_count();
    if (m == 0) return out;

    detail::MisSolver solver(*conflicts);
    auto pool = solver.full_pool();
    out.rho = solver.max_size(pool);

    int need = out.rho;
    std::vector<uint64_t> candidates = pool;
    int from = 0;
    while (need > 0) {
        bool advanced = false;
        for (int e = from; e < m; ++e) {
            if (!detail::MisSolver::test_bit(candidates.data(), e)) continue;
            // candidates beyond e that survive picking e
            std::vector<uint64_t> next(candidates);
            const uint64_t* r = solver.row(e);
            for (int w = 0; w < solver.words(); ++w) next[w] &= ~r[w];
            for (int v = 0; v <= e; ++v)
                next[v / 64] &= ~(1ull << (v % 64));
            if (solver.at_least(next, need - 1)) {
                out.witness.push_back(e);
                candidates = std::move(next);
                from = e + 1;
                --need;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("witness reconstruction failed");
    }
    return out;
}

// Independent reference: depth-first subset growth over edge ids with only the
// pairwise common-edge filter; no conflict graph, no bounding.
inline int eop_number_oracle(const Graph& g, int guard_m = 24) {
    int m = g.edge_count();
    if (m > guard_m)
        throw std::invalid_argument("oracle guard: m=" + std::to_string(m) + " exceeds " +
                                    std::to_string(guard_m));
    int best = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size());
        for (int e = next; e < m; ++e) {
            bool ok = true;
            for (int d : cur)
                if (have_common_edge(g, d, e)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace eop
