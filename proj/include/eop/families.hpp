#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "eop/builders.hpp"
#include "eop/canonical.hpp"

namespace eop {

// Families of connected graphs attaining rho = m-2 (A1..A7) and rho = m-3
// (R1..R14, S1..S15).  Within each family every parameter unit adds one
// vertex and one edge, which recognition exploits.  Families marked
// ambiguous admit more than one construction reading; the shipped labeling
// is the one that survives the audit sweeps and the exhaustive small-order
// scan, and `audit_family` keeps the rejected readings visible.

enum class FamilyId {
    A1, A2, A3, A4, A5, A6, A7,
    R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14,
    S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S15,
};

constexpr int family_count = 36;

enum class ExtremalClass { m, m_minus_1, m_minus_2, m_minus_3, none };

inline const char* to_string(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::m: return "m";
        case ExtremalClass::m_minus_1: return "m-1";
        case ExtremalClass::m_minus_2: return "m-2";
        case ExtremalClass::m_minus_3: return "m-3";
        default: return "none";
    }
}

inline int extremal_rho(ExtremalClass c, int m) {
    switch (c) {
        case ExtremalClass::m: return m;
        case ExtremalClass::m_minus_1: return m - 1;
        case ExtremalClass::m_minus_2: return m - 2;
        case ExtremalClass::m_minus_3: return m - 3;
        default: throw std::invalid_argument("no rho value for class none");
    }
}

struct FamilyInfo {
    FamilyId id;
    const char* name;
    const char* summary;
    int arity;
    std::array<int, 3> min_params;
    std::array<const char*, 3> param_names;
    bool ambiguous;  // description admits more than one reading
    ExtremalClass cls;
};

inline const std::array<FamilyInfo, family_count>& family_catalog() {
    static const std::array<FamilyInfo, family_count> table = {{
        {FamilyId::A1, "A1", "P5 with pendants at both supports", 2, {0, 0, 0},
         {"r1", "r2", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A2, "A2", "P6 with pendants at both supports", 2, {0, 0, 0},
         {"r1", "r2", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A3, "A3", "P7 with pendants at both supports", 2, {0, 0, 0},
         {"r1", "r2", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A4, "A4", "triangle with pendants at one vertex", 1, {0, 0, 0},
         {"t", "", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A5, "A5", "C4 with pendants at one vertex", 1, {0, 0, 0},
         {"t", "", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A6, "A6", "star with two edges subdivided", 1, {3, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::A7, "A7", "star with two pendants at one leaf", 1, {3, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_2},
        {FamilyId::R1, "R1", "star with three pendants at one leaf", 1, {4, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R2, "R2", "star with a two-edge path at one leaf and a pendant at another", 1,
         {3, 0, 0}, {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R3, "R3", "star with two pendants at one leaf and one at another", 1, {3, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R4, "R4", "star with a two-edge path and a pendant at the same leaf", 1,
         {3, 0, 0}, {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R5, "R5", "star with a pendant triangle at one leaf", 1, {2, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R6, "R6", "star with three edges subdivided", 1, {4, 0, 0},
         {"s", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R7, "R7", "triangle with pendants at one vertex and a pendant at another", 1,
         {1, 0, 0}, {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R8, "R8", "C4 with pendants at one vertex and a pendant opposite", 1, {1, 0, 0},
         {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R9, "R9", "K4 minus an edge with pendants at a diagonal vertex", 1, {0, 0, 0},
         {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R10, "R10", "K4 minus an edge, diagonal subdivided, pendants at one end", 1,
         {0, 0, 0}, {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R11, "R11", "triangle with pendants and a two-edge path at the same vertex", 1,
         {0, 0, 0}, {"t", "", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::R12, "R12", "C4 with pendants and a two-edge path at the same vertex", 1,
         {0, 0, 0}, {"t", "", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::R13, "R13", "C4 with pendants at one vertex and a pendant adjacent", 1,
         {1, 0, 0}, {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::R14, "R14", "C5 with pendants at one vertex", 1, {0, 0, 0},
         {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S1, "S1", "P5 with pendants at both supports and one at the centre", 2,
         {1, 1, 0}, {"r1", "r2", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S2, "S2", "P6 with pendants at both supports and one beside a support", 2,
         {0, 0, 0}, {"r1", "r2", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::S3, "S3", "P7 with pendants at both supports and one beside a support", 2,
         {0, 0, 0}, {"r1", "r2", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::S4, "S4", "P7 with pendants at both supports and one at the centre", 2,
         {0, 0, 0}, {"r1", "r2", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S5, "S5", "P8 with pendants at both supports", 2, {0, 0, 0},
         {"r1", "r2", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S6, "S6", "P6 with pendants at a support and at the far interior vertex", 2,
         {0, 1, 0}, {"r", "t", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::S7, "S7", "P7 with pendants at a support and at the far interior vertex", 2,
         {0, 1, 0}, {"r", "t", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::S8, "S8", "P8 with pendants at a support and at the far interior vertex", 2,
         {0, 1, 0}, {"r", "t", ""}, true, ExtremalClass::m_minus_3},
        {FamilyId::S9, "S9", "triangle with a two-edge path, pendants at its far end", 1,
         {0, 0, 0}, {"t", "", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S10, "S10", "C4 with a two-edge path, pendants at its far end and opposite", 2,
         {0, 0, 0}, {"t1", "t2", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S11, "S11", "C4 with pendants at one vertex and a star attached opposite", 2,
         {0, 3, 0}, {"t", "r", ""}, false, ExtremalClass::m_minus_3},
        {FamilyId::S12, "S12", "spider with three two-edge legs and pendants at the supports", 3,
         {0, 0, 0}, {"r1", "r2", "r3"}, false, ExtremalClass::m_minus_3},
        {FamilyId::S13, "S13", "spider with legs of two, two and three edges, pendants at the supports",
         3, {0, 0, 0}, {"r1", "r2", "r3"}, false, ExtremalClass::m_minus_3},
        {FamilyId::S14, "S14", "spider with legs of two, three and three edges, pendants at the supports",
         3, {0, 0, 0}, {"r1", "r2", "r3"}, false, ExtremalClass::m_minus_3},
        {FamilyId::S15, "S15", "spider with three three-edge legs and pendants at the supports", 3,
         {0, 0, 0}, {"r1", "r2", "r3"}, false, ExtremalClass::m_minus_3},
    }};
    return table;
}

inline const FamilyInfo& family_info(FamilyId id) { return family_catalog()[static_cast<int>(id)]; }

inline const char* to_string(FamilyId id) { return family_info(id).name; }

inline char family_letter(FamilyId id) { return family_info(id).name[0]; }

inline FamilyId family_from_string(const std::string& name) {
    for (const FamilyInfo& info : family_catalog())
        if (name == info.name) return info.id;
    throw std::invalid_argument("unknown family: " + name);
}

namespace detail {

// hub plus three legs of the given edge lengths; pendants go at the
// neighbour of each leg's leaf
inline Graph spider_with_support_pendants(const std::array<int, 3>& legs,
                                          const std::vector<int>& pend) {
    GraphBuilder b;
    int hub = b.add_vertex();
    std::array<int, 3> support{};
    for (int i = 0; i < 3; ++i) support[i] = b.attach_path(hub, legs[i]) - 1;
    for (int i = 0; i < 3; ++i) b.add_pendants(support[i], pend[i]);
    return b.build();
}

}  // namespace detail

inline Graph generate_family(FamilyId id, const std::vector<int>& params) {
    const FamilyInfo& info = family_info(id);
    if (static_cast<int>(params.size()) != info.arity)
        throw std::invalid_argument(std::string(info.name) + " takes " +
                                    std::to_string(info.arity) +
                                    (info.arity == 1 ? " parameter" : " parameters"));
    for (int i = 0; i < info.arity; ++i)
        if (params[i] < info.min_params[i])
            throw std::invalid_argument(std::string(info.name) + " requires " +
                                        info.param_names[i] + " >= " +
                                        std::to_string(info.min_params[i]));
    GraphBuilder b;
    switch (id) {
        case FamilyId::A1:
            b.add_path(5);
            b.add_pendants(1, params[0]);
            b.add_pendants(3, params[1]);
            break;
        case FamilyId::A2:
            b.add_path(6);
            b.add_pendants(1, params[0]);
            b.add_pendants(4, params[1]);
            break;
        case FamilyId::A3:
            b.add_path(7);
            b.add_pendants(1, params[0]);
            b.add_pendants(5, params[1]);
            break;
        case FamilyId::A4:
            b.add_cycle(3);
            b.add_pendants(0, params[0]);
            break;
        case FamilyId::A5:
            b.add_cycle(4);
            b.add_pendants(0, params[0]);
            break;
        case FamilyId::A6:
            b.add_vertex();
            b.add_pendants(0, params[0] - 2);
            b.attach_path(0, 2);
            b.attach_path(0, 2);
            break;
        case FamilyId::A7:
            b.add_vertex();
            b.add_pendants(0, params[0]);
            b.add_pendants(1, 2);
            break;
        case FamilyId::R1:
            b.add_vertex();
            b.add_pendants(0, params[0]);
            b.add_pendants(1, 3);
            break;
        case FamilyId::R2:
            b.add_vertex();
            b.add_pendants(0, params[0]);
            b.attach_path(1, 2);
            b.add_pendants(2, 1);
            break;
        case FamilyId::R3:
            b.add_vertex();
            b.add_pendants(0, params[0]);
            b.add_pendants(1, 2);
            b.add_pendants(2, 1);
            break;
        case FamilyId::R4:
            b.add_vertex();
            b.add_pendants(0, params[0]);
            b.attach_path(1, 2);
            b.add_pendants(1, 1);
            break;
        case FamilyId::R5: {
            b.add_vertex();
            b.add_pendants(0, params[0]);
            int u = b.add_vertex();
            int v = b.add_vertex();
            b.add_edge(1, u);
            b.add_edge(1, v);
            b.add_edge(u, v);
            break;
        }
        case FamilyId::R6:
            b.add_vertex();
            b.add_pendants(0, params[0] - 3);
            b.attach_path(0, 2);
            b.attach_path(0, 2);
            b.attach_path(0, 2);
            break;
        case FamilyId::R7:
            b.add_cycle(3);
            b.add_pendants(0, params[0]);
            b.add_pendants(1, 1);
            break;
        case FamilyId::R8:
            b.add_cycle(4);
            b.add_pendants(0, params[0]);
            b.add_pendants(2, 1);
            break;
        case FamilyId::R9:
            for (int i = 0; i < 4; ++i) b.add_vertex();
            b.add_edge(0, 1);
            b.add_edge(0, 2);
            b.add_edge(0, 3);
            b.add_edge(1, 2);
            b.add_edge(1, 3);
            b.add_pendants(0, params[0]);
            break;
        case FamilyId::R10:
            for (int i = 0; i < 5; ++i) b.add_vertex();
            b.add_edge(0, 2);
            b.add_edge(0, 3);
            b.add_edge(1, 2);
            b.add_edge(1, 3);
            b.add_edge(0, 4);
            b.add_edge(1, 4);
            b.add_pendants(0, params[0]);
            break;
        case FamilyId::R11:
            b.add_cycle(3);
            b.add_pendants(0, params[0]);
            b.attach_path(0, 2);
            break;
        case FamilyId::R12:
            b.add_cycle(4);
            b.add_pendants(0, params[0]);
            b.attach_path(0, 2);
            break;
        case FamilyId::R13:
            b.add_cycle(4);
            b.add_pendants(0, params[0]);
            b.add_pendants(1, 1);
            break;
        case FamilyId::R14:
            b.add_cycle(5);
            b.add_pendants(0, params[0]);
            break;
        case FamilyId::S1:
            b.add_path(5);
            b.add_pendants(1, params[0]);
            b.add_pendants(3, params[1]);
            b.add_pendants(2, 1);
            break;
        case FamilyId::S2:
            b.add_path(6);
            b.add_pendants(1, params[0]);
            b.add_pendants(4, params[1]);
            b.add_pendants(2, 1);
            break;
        case FamilyId::S3:
            b.add_path(7);
            b.add_pendants(1, params[0]);
            b.add_pendants(5, params[1]);
            b.add_pendants(2, 1);
            break;
        case FamilyId::S4:
            b.add_path(7);
            b.add_pendants(1, params[0]);
            b.add_pendants(5, params[1]);
            b.add_pendants(3, 1);
            break;
        case FamilyId::S5:
            b.add_path(8);
            b.add_pendants(1, params[0]);
            b.add_pendants(6, params[1]);
            break;
        case FamilyId::S6:
            b.add_path(6);
            b.add_pendants(1, params[0]);
            b.add_pendants(3, params[1]);
            break;
        case FamilyId::S7:
            b.add_path(7);
            b.add_pendants(1, params[0]);
            b.add_pendants(4, params[1]);
            break;
        case FamilyId::S8:
            b.add_path(8);
            b.add_pendants(1, params[0]);
            b.add_pendants(5, params[1]);
            break;
        case FamilyId::S9: {
            b.add_cycle(3);
            int far = b.attach_path(0, 2);
            b.add_pendants(far, params[0]);
            break;
        }
        case FamilyId::S10: {
            b.add_cycle(4);
            int far = b.attach_path(0, 2);
            b.add_pendants(far, params[0]);
            b.add_pendants(2, params[1]);
            break;
        }
        case FamilyId::S11: {
            b.add_cycle(4);
            b.add_pendants(0, params[0]);
            int hub = b.add_vertex();
            b.add_edge(2, hub);
            b.add_pendants(hub, params[1] - 1);
            break;
        }
        case FamilyId::S12:
            return detail::spider_with_support_pendants({2, 2, 2}, params);
        case FamilyId::S13:
            return detail::spider_with_support_pendants({2, 2, 3}, params);
        case FamilyId::S14:
            return detail::spider_with_support_pendants({2, 3, 3}, params);
        case FamilyId::S15:
            return detail::spider_with_support_pendants({3, 3, 3}, params);
    }
    return b.build();
}

struct FamilyMatch {
    FamilyId id;
    std::vector<int> params;
};

inline bool operator==(const FamilyMatch& a, const FamilyMatch& b) {
    return a.id == b.id && a.params == b.params;
}

namespace detail {

template <typename Fn>
void for_each_composition(int total, int parts, std::vector<int>& acc, Fn&& fn) {
    if (parts == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        acc.push_back(first);
        for_each_composition(total - first, parts - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace detail

// all (family, params) pairs generating a graph isomorphic to g
inline std::vector<FamilyMatch> recognize_families(const Graph& g) {
    std::vector<FamilyMatch> out;
    if (g.vertex_count() == 0 || !is_connected(g)) return out;
    const std::vector<uint8_t> target = canonical_form(g).cert;
    for (const FamilyInfo& info : family_catalog()) {
        std::vector<int> mins(info.min_params.begin(), info.min_params.begin() + info.arity);
        const Graph base = generate_family(info.id, mins);
        const int extra = g.vertex_count() - base.vertex_count();
        if (extra < 0 || extra != g.edge_count() - base.edge_count()) continue;
        std::vector<int> acc;
        detail::for_each_composition(extra, info.arity, acc, [&](const std::vector<int>& parts) {
            std::vector<int> params(info.arity);
            for (int i = 0; i < info.arity; ++i) params[i] = mins[i] + parts[i];
            Graph h = generate_family(info.id, params);
            if (canonical_form(h).cert == target) out.push_back({info.id, params});
        });
    }
    return out;
}

// Connected graphs with one edge attain rho among m, m-1, m-2, m-3 exactly
// when they are a star, a once-subdivided star, a member of some A family,
// or a member of some R or S family, respectively.
inline ExtremalClass predict_extremal_class(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("extremal class needs a connected graph");
    if (g.edge_count() == 0) throw std::invalid_argument("extremal class needs at least one edge");
    if (is_star(g)) return ExtremalClass::m;
    if (is_once_subdivided_star(g)) return ExtremalClass::m_minus_1;
    bool in_a = false, in_rs = false;
    for (const FamilyMatch& match : recognize_families(g))
        (family_letter(match.id) == 'A' ? in_a : in_rs) = true;
    if (in_a) return ExtremalClass::m_minus_2;
    if (in_rs) return ExtremalClass::m_minus_3;
    return ExtremalClass::none;
}

}  // namespace eop
