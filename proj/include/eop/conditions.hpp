#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eop/packing.hpp"

namespace eop {

// Characterization of 2 <= rho <= t for connected graphs via four conditions:
//  C1: 2 <= diam(G) <= 2t
//  C2: no induced K_{1,t+1}
//  C3: for every induced matching M of size t, every vertex outside V(G[M])
//      has at least two neighbours in V(G[M])
//  C4: for every EOP set D of size t whose star decomposition has s components
//      with 2 <= s <= t-1, every outside vertex adjacent to a centre u_j of
//      some component is adjacent to a vertex of V(G[D]) \ {u_j}
// C3 and C4 hold vacuously when no qualifying matching or set exists; C4 is
// vacuous at t=2.  Single-edge star components admit both endpoints as centre
// and C4 quantifies over both choices.

struct InducedStarWitness {
    int centre;
    std::vector<int> leaves;
};

inline std::optional<InducedStarWitness> find_induced_star(const Graph& g, int s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < s) continue;
        std::vector<int> picked;
        if (detail::has_independent_subset(g, g.neighbors(v), 0, picked, s))
            return InducedStarWitness{v, picked};
    }
    return std::nullopt;
}

struct C1Verdict {
    bool holds = false;
    int diam = -1;
};

struct C2Verdict {
    bool holds = false;
    std::optional<InducedStarWitness> star;  // induced K_{1,t+1} on failure
};

struct C3Verdict {
    bool holds = false;
    bool vacuous = false;
    std::vector<int> matching;  // on failure
    int z = -1;
};

struct C4Verdict {
    bool holds = false;
    bool vacuous = false;
    std::vector<int> eop_set;  // on failure
    int centre = -1;
    int z = -1;
};

inline void require_window_input(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    if (!is_connected(g)) throw std::invalid_argument("conditions need a connected graph");
}

inline C1Verdict check_c1(const Graph& g, int t) {
    require_window_input(g, t);
    C1Verdict v;
    v.diam = diameter(g);
    v.holds = 2 <= v.diam && v.diam <= 2 * t;
    return v;
}

inline C2Verdict check_c2(const Graph& g, int t) {
    require_window_input(g, t);
    C2Verdict v;
    v.star = find_induced_star(g, t + 1);
    v.holds = !v.star.has_value();
    return v;
}

inline C3Verdict check_c3(const Graph& g, int t, const Graph* conflicts = nullptr) {
    require_window_input(g, t);
    C3Verdict v;
    auto matchings = enumerate_induced_matchings(g, t, conflicts);
    if (matchings.empty()) {
        v.holds = true;
        v.vacuous = true;
        return v;
    }
    for (const auto& matching : matchings) {
        std::vector<int> vm = saturated_vertices(g, matching);
        for (int z = 0; z < g.vertex_count(); ++z) {
            if (std::binary_search(vm.begin(), vm.end(), z)) continue;
            int cnt = 0;
            for (int w : g.neighbors(z))
                if (std::binary_search(vm.begin(), vm.end(), w)) ++cnt;
            if (cnt < 2) {
                v.holds = false;
                v.matching = matching;
                v.z = z;
                return v;
            }
        }
    }
    v.holds = true;
    return v;
}

inline C4Verdict check_c4(const Graph& g, int t, const Graph* conflicts = nullptr) {
    require_window_input(g, t);
    C4Verdict v;
    if (t == 2) {  // the component count range 2..t-1 is empty
        v.holds = true;
        v.vacuous = true;
        return v;
    }
    bool qualifying = false;
    for (const auto& d : enumerate_eop_sets(g, t, conflicts)) {
        StarDecomposition sd = star_decomposition(g, d);
        int s = static_cast<int>(sd.components.size());
        if (s < 2 || s > t - 1) continue;
        qualifying = true;
        std::vector<int> vd = saturated_vertices(g, d);
        for (const StarComponent& comp : sd.components)
            for (int centre : comp.centre_choices)
                for (int z : g.neighbors(centre)) {
                    if (std::binary_search(vd.begin(), vd.end(), z)) continue;
                    bool attached = false;
                    for (int w : g.neighbors(z))
                        if (w != centre && std::binary_search(vd.begin(), vd.end(), w)) {
                            attached = true;
                            break;
                        }
                    if (!attached) {
                        v.holds = false;
                        v.eop_set = d;
                        v.centre = centre;
                        v.z = z;
                        return v;
                    }
                }
    }
    v.holds = true;
    v.vacuous = !qualifying;
    return v;
}

struct ConditionReport {
    int t = 0;
    C1Verdict c1;
    C2Verdict c2;
    C3Verdict c3;
    C4Verdict c4;
    bool window() const { return c1.holds && c2.holds && c3.holds && c4.holds; }
};

inline ConditionReport check_conditions(const Graph& g, int t, const Graph* conflicts = nullptr) {
    require_window_input(g, t);
    ConditionReport r;
    r.t = t;
    r.c1 = check_c1(g, t);
    r.c2 = check_c2(g, t);
    r.c3 = check_c3(g, t, conflicts);
    r.c4 = check_c4(g, t, conflicts);
    return r;
}

// true iff 2 <= rho(G) <= t (for connected G), by the window characterization
inline bool predict_rho_window(const Graph& g, int t, const Graph* conflicts = nullptr) {
    return check_conditions(g, t, conflicts).window();
}

// rho(G) = t, t >= 3, via the window at t and its failure at t-1.  Stars
// K_{1,s} with 1 <= s <= t-1 are outside the corollary's scope.
inline bool predict_rho_equals_t(const Graph& g, int t, const Graph* conflicts = nullptr) {
    if (t < 3) throw std::invalid_argument("predict_rho_equals_t needs t >= 3");
    require_window_input(g, 2);
    if (is_star(g)) {
        int s = g.vertex_count() - 1;
        if (1 <= s && s <= t - 1)
            throw std::invalid_argument("K_{1," + std::to_string(s) +
                                        "} is excluded for t=" + std::to_string(t));
    }
    return predict_rho_window(g, t, conflicts) && !predict_rho_window(g, t - 1, conflicts);
}

struct Rho2Verdict {
    bool holds = false;
    std::string reason;  // first failing clause, empty when holds
};

// Independent check of rho(G) = 2 for connected graphs: diameter between 2 and
// 4, no induced K_{1,3}, and around every induced matching of size two every
// outside vertex sees at least two of its four endpoints.
inline Rho2Verdict check_rho2(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_rho2 needs a connected graph");
    Rho2Verdict v;
    if (g.vertex_count() < 2 || g.edge_count() < 1) {
        v.reason = "diameter out of range";
        return v;
    }
    int diam = diameter(g);
    if (diam < 2 || diam > 4) {
        v.reason = "diameter " + std::to_string(diam) + " out of [2,4]";
        return v;
    }
    if (auto star = find_induced_star(g, 3)) {
        v.reason = "induced K_{1,3} at vertex " + std::to_string(star->centre);
        return v;
    }
    int m = g.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge a = g.edge(i), b = g.edge(j);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            if (have_common_edge(g, i, j)) continue;
            int ends[4] = {a.u, a.v, b.u, b.v};
            for (int z = 0; z < g.vertex_count(); ++z) {
                if (z == a.u || z == a.v || z == b.u || z == b.v) continue;
                int cnt = 0;
                for (int end : ends)
                    if (g.adjacent(z, end)) ++cnt;
                if (cnt < 2) {
                    v.reason = "vertex " + std::to_string(z) +
                               " sees fewer than two endpoints of edges " + std::to_string(i) +
                               "," + std::to_string(j);
                    return v;
                }
            }
        }
    v.holds = true;
    return v;
}

}  // namespace eop
