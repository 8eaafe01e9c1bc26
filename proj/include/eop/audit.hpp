#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "eop/enumerate.hpp"
#include "eop/families.hpp"
#include "eop/graph6.hpp"
#include "eop/solver.hpp"

namespace eop {

// Audit sweeps: rebuild a family over a parameter box and verify every member
// lands in its extremal class.  For ambiguous families the sweep also covers
// the rival readings of the construction, so the report shows which readings
// hold up and which collapse into other families or miss the class entirely.

struct AuditCandidate {
    std::string description;
    bool shipped = false;
    int passes = 0;
    int total = 0;
    std::vector<std::string> failures;      // first few failing members
    std::vector<FamilyId> coincides_with;   // families recognizing a sample member
};

struct AuditReport {
    FamilyId id = FamilyId::A1;
    bool ambiguous = false;
    ExtremalClass cls = ExtremalClass::none;
    int max_param = 0;
    std::vector<AuditCandidate> candidates;  // shipped reading first

    bool shipped_clean() const {
        return !candidates.empty() && candidates.front().passes == candidates.front().total;
    }
};

namespace detail {

struct CandidateSpec {
    std::string description;
    bool shipped;
    std::function<Graph(const std::vector<int>&)> make;
};

inline std::vector<CandidateSpec> audit_candidates(FamilyId id) {
    std::vector<CandidateSpec> specs;
    specs.push_back({std::string(family_info(id).summary), true,
                     [id](const std::vector<int>& p) { return generate_family(id, p); }});
    auto cycle_with = [](int len, int t, int site, int gadget_edges) {
        GraphBuilder b;
        b.add_cycle(len);
        b.add_pendants(0, t);
        if (gadget_edges == 1)
            b.add_pendants(site, 1);
        else
            b.attach_path(site, gadget_edges);
        return b.build();
    };
    auto path_with = [](int len, int support, int r, int t, int site) {
        GraphBuilder b;
        b.add_path(len);
        b.add_pendants(support, r);
        b.add_pendants(site, t);
        return b.build();
    };
    auto double_support_with = [](int len, int s1, int s2, int r1, int r2, int site) {
        GraphBuilder b;
        b.add_path(len);
        b.add_pendants(s1, r1);
        b.add_pendants(s2, r2);
        b.add_pendants(site, 1);
        return b.build();
    };
    switch (id) {
        case FamilyId::R11:
            specs.push_back({"pendant edge at the pendant-cluster vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(3, p[0], 0, 1); }});
            specs.push_back({"pendant edge at another cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(3, p[0], 1, 1); }});
            specs.push_back({"two-edge path at another cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(3, p[0], 1, 2); }});
            break;
        case FamilyId::R12:
            specs.push_back({"pendant edge at the pendant-cluster vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(4, p[0], 0, 1); }});
            specs.push_back({"pendant edge at an adjacent cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(4, p[0], 1, 1); }});
            specs.push_back({"pendant edge at the opposite cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(4, p[0], 2, 1); }});
            specs.push_back({"two-edge path at an adjacent cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(4, p[0], 1, 2); }});
            specs.push_back({"two-edge path at the opposite cycle vertex", false,
                             [=](const std::vector<int>& p) { return cycle_with(4, p[0], 2, 2); }});
            break;
        case FamilyId::S2:
            for (int site : {0, 1, 3})
                specs.push_back({std::string("extra pendant at vertex ") + std::to_string(site) +
                                     " of the path",
                                 false, [=](const std::vector<int>& p) {
                                     return double_support_with(6, 1, 4, p[0], p[1], site);
                                 }});
            break;
        case FamilyId::S3:
            for (int site : {0, 1, 3, 4})
                specs.push_back({std::string("extra pendant at vertex ") + std::to_string(site) +
                                     " of the path",
                                 false, [=](const std::vector<int>& p) {
                                     return double_support_with(7, 1, 5, p[0], p[1], site);
                                 }});
            break;
        case FamilyId::S6:
            for (int site : {2, 4})
                specs.push_back({std::string("pendant set at vertex ") + std::to_string(site) +
                                     " of the path",
                                 false, [=](const std::vector<int>& p) {
                                     return path_with(6, 1, p[0], p[1], site);
                                 }});
            break;
        case FamilyId::S7:
            for (int site : {2, 3, 5})
                specs.push_back({std::string("pendant set at vertex ") + std::to_string(site) +
                                     " of the path",
                                 false, [=](const std::vector<int>& p) {
                                     return path_with(7, 1, p[0], p[1], site);
                                 }});
            break;
        case FamilyId::S8:
            for (int site : {2, 3, 4, 6})
                specs.push_back({std::string("pendant set at vertex ") + std::to_string(site) +
                                     " of the path",
                                 false, [=](const std::vector<int>& p) {
                                     return path_with(8, 1, p[0], p[1], site);
                                 }});
            break;
        default:
            break;
    }
    return specs;
}

template <typename Fn>
void for_each_box_point(const FamilyInfo& info, int max_param, std::vector<int>& acc, Fn&& fn) {
    if (static_cast<int>(acc.size()) == info.arity) {
        fn(acc);
        return;
    }
    int lo = info.min_params[acc.size()];
    for (int v = lo; v <= std::max(lo, max_param); ++v) {
        acc.push_back(v);
        for_each_box_point(info, max_param, acc, fn);
        acc.pop_back();
    }
}

inline std::string format_params(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace detail

inline AuditReport audit_family(FamilyId id, int max_param = 4) {
    const FamilyInfo& info = family_info(id);
    if (max_param < 0) throw std::invalid_argument("max_param must be >= 0");
    AuditReport report;
    report.id = id;
    report.ambiguous = info.ambiguous;
    report.cls = info.cls;
    report.max_param = max_param;

    std::vector<int> rep(info.arity);
    for (int i = 0; i < info.arity; ++i) rep[i] = std::max(info.min_params[i], 2);

    std::set<std::vector<uint8_t>> seen;  // drop readings isomorphic at the sample point
    for (const detail::CandidateSpec& spec : detail::audit_candidates(id)) {
        const Graph sample = spec.make(rep);
        if (!seen.insert(canonical_form(sample).cert).second) continue;

        AuditCandidate cand;
        cand.description = spec.description;
        cand.shipped = spec.shipped;
        for (const FamilyMatch& match : recognize_families(sample))
            if (!(spec.shipped && match.id == id) &&
                (cand.coincides_with.empty() || cand.coincides_with.back() != match.id))
                cand.coincides_with.push_back(match.id);

        std::vector<int> acc;
        detail::for_each_box_point(info, max_param, acc, [&](const std::vector<int>& params) {
            const Graph g = spec.make(params);
            const int m = g.edge_count();
            const int expected = extremal_rho(info.cls, m);
            const int actual = eop_number_exact(g).rho;
            ++cand.total;
            if (actual == expected) {
                ++cand.passes;
            } else if (cand.failures.size() < 4) {
                cand.failures.push_back("params=" + detail::format_params(params) +
                                        " g6=" + write_graph6(canonical_graph(g)) +
                                        " m=" + std::to_string(m) +
                                        " rho=" + std::to_string(actual) +
                                        " expected=" + std::to_string(expected));
            }
        });
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

inline std::vector<AuditReport> audit_ambiguous_families(int max_param = 4) {
    std::vector<AuditReport> reports;
    for (const FamilyInfo& info : family_catalog())
        if (info.ambiguous) reports.push_back(audit_family(info.id, max_param));
    return reports;
}

// Corpus gap sweep: graphs attaining rho = m-3 that no listed family
// recognizes.  Each gap is cross-referenced against the alternative readings
// above, plus two-site triangle decorations (pendant cluster at one triangle
// vertex, path or hung star at another) observed to fill the corpus gaps.

struct GapRecord {
    std::string graph;  // canonical graph6
    int n = 0;
    int m = 0;
    int rho = 0;
    std::vector<std::string> candidate_hits;  // audited readings generating it
    std::string structure;                    // matched two-site shape, if any
};

struct GapReport {
    int max_n = 0;
    int scanned = 0;  // connected graphs with m >= 4
    std::vector<GapRecord> records;
};

namespace detail {

inline Graph two_site_triangle_path(int t_far, int t_other) {
    GraphBuilder b;
    b.add_cycle(3);
    int far = b.attach_path(0, 2);
    b.add_pendants(far, t_far);
    b.add_pendants(1, t_other);
    return b.build();
}

inline Graph two_site_triangle_star(int s, int t_other) {
    Graph base = generate_family(FamilyId::R5, {s});  // hub 0, triangle {1, s+1, s+2}
    GraphBuilder b;
    for (int v = 0; v < base.vertex_count(); ++v) b.add_vertex();
    for (auto [u, v] : base.edges()) b.add_edge(u, v);
    b.add_pendants(base.vertex_count() - 2, t_other);
    return b.build();
}

}  // namespace detail

// Which audited alternative readings generate this graph, if any.
inline std::vector<std::string> gap_candidate_hits(const Graph& g) {
    std::vector<std::string> hits;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const std::vector<uint8_t> cert = canonical_form(g).cert;
    for (const FamilyInfo& info : family_catalog()) {
        if (!info.ambiguous) continue;
        for (const detail::CandidateSpec& spec : detail::audit_candidates(info.id)) {
            if (spec.shipped) continue;
            bool hit = false;
            std::vector<int> acc;
            detail::for_each_box_point(info, n, acc, [&](const std::vector<int>& params) {
                if (hit) return;
                const Graph cand = spec.make(params);
                if (cand.vertex_count() == n && cand.edge_count() == m &&
                    canonical_form(cand).cert == cert) {
                    hits.push_back(std::string(family_info(info.id).name) + " reading \"" +
                                   spec.description + "\" params=" + detail::format_params(params));
                    hit = true;
                }
            });
        }
    }
    return hits;
}

// Matches the graph against the two-site triangle shapes; empty if neither fits.
inline std::string gap_structure(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<uint8_t> cert = canonical_form(g).cert;
    for (int a = 0; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Graph cand = detail::two_site_triangle_path(a, b);
            if (cand.vertex_count() == n && canonical_form(cand).cert == cert)
                return "triangle + 2-edge path (far-end pendants=" + std::to_string(a) +
                       ") + second-site pendants=" + std::to_string(b);
        }
    for (int s = 2; s <= n; ++s)
        for (int b = 1; b <= n; ++b) {
            Graph cand = detail::two_site_triangle_star(s, b);
            if (cand.vertex_count() == n && canonical_form(cand).cert == cert)
                return "triangle + hung K_{1," + std::to_string(s - 1) +
                       "} + second-site pendants=" + std::to_string(b);
        }
    return {};
}

inline GapReport audit_corpus_gaps(int max_n = 7) {
    if (max_n < 3 || max_n > 7) throw std::invalid_argument("max_n must be in [3, 7]");
    GapReport report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const int m = g.edge_count();
            if (m < 4) continue;
            ++report.scanned;
            if (eop_number_exact(g).rho != m - 3) continue;
            if (predict_extremal_class(g) == ExtremalClass::m_minus_3) continue;

            GapRecord rec;
            rec.graph = write_graph6(canonical_graph(g));
            rec.n = n;
            rec.m = m;
            rec.rho = m - 3;
            rec.candidate_hits = gap_candidate_hits(g);
            rec.structure = gap_structure(g);
            report.records.push_back(std::move(rec));
        }
    }
    return report;
}

}  // namespace eop
