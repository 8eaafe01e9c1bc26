#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "eop/audit.hpp"
#include "eop/builders.hpp"
#include "eop/enumerate.hpp"
#include "eop/families.hpp"
#include "eop/graph6.hpp"
#include "eop/solver.hpp"
#include "testutil.hpp"

using namespace eop;

namespace {

std::string canon6(const Graph& g) { return write_graph6(canonical_graph(g)); }

bool has_match(const std::vector<FamilyMatch>& ms, FamilyId id, std::vector<int> params) {
    return std::find(ms.begin(), ms.end(), FamilyMatch{id, std::move(params)}) != ms.end();
}

}  // namespace

TEST_CASE("family catalog is complete and name round-trips") {
    REQUIRE(family_catalog().size() == 36);
    std::set<std::string> names;
    for (const FamilyInfo& info : family_catalog()) {
        CHECK(info.id == family_from_string(info.name));
        CHECK(names.insert(info.name).second);
        CHECK(info.arity >= 1);
        CHECK(info.arity <= 3);
        if (info.name[0] == 'A')
            CHECK(info.cls == ExtremalClass::m_minus_2);
        else
            CHECK(info.cls == ExtremalClass::m_minus_3);
    }
    CHECK_THROWS_WITH(family_from_string("Q3"), "unknown family: Q3");
    const std::set<std::string> ambiguous = {"R11", "R12", "S2", "S3", "S6", "S7", "S8"};
    for (const FamilyInfo& info : family_catalog())
        CHECK(info.ambiguous == (ambiguous.count(info.name) > 0));
}

TEST_CASE("generators hit pinned base graphs") {
    CHECK(canon6(generate_family(FamilyId::A4, {0})) == canon6(cycle_graph(3)));
    CHECK(canon6(generate_family(FamilyId::A5, {0})) == canon6(cycle_graph(4)));
    CHECK(canon6(generate_family(FamilyId::R14, {0})) == canon6(cycle_graph(5)));
    CHECK(canon6(generate_family(FamilyId::A1, {0, 0})) == canon6(path_graph(5)));

    const Graph r1 = generate_family(FamilyId::R1, {4});
    CHECK(r1.vertex_count() == 8);
    CHECK(r1.edge_count() == 7);
    CHECK(is_connected(r1));

    // triad spider with no extra pendants: three legs of length 2
    const Graph s12 = generate_family(FamilyId::S12, {0, 0, 0});
    CHECK(s12.vertex_count() == 7);
    CHECK(s12.edge_count() == 6);
    CHECK(eop_number_exact(s12).rho == 3);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_WITH(generate_family(FamilyId::R1, {3}), "R1 requires s >= 4");
    CHECK_THROWS_WITH(generate_family(FamilyId::R6, {3}), "R6 requires s >= 4");
    CHECK_THROWS_WITH(generate_family(FamilyId::A6, {2}), "A6 requires s >= 3");
    CHECK_THROWS_WITH(generate_family(FamilyId::S11, {0, 2}), "S11 requires r >= 3");
    CHECK_THROWS_WITH(generate_family(FamilyId::S1, {0, 1}), "S1 requires r1 >= 1");
    CHECK_THROWS_WITH(generate_family(FamilyId::R7, {0}), "R7 requires t >= 1");
    CHECK_THROWS_WITH(generate_family(FamilyId::A4, {}), "A4 takes 1 parameter");
    CHECK_THROWS_WITH(generate_family(FamilyId::A4, {1, 2}), "A4 takes 1 parameter");
    CHECK_THROWS_WITH(generate_family(FamilyId::S12, {1}), "S12 takes 3 parameters");
}

TEST_CASE("every generated member is recognized with its parameters") {
    std::mt19937 rng(20240817);
    for (const FamilyInfo& info : family_catalog()) {
        std::vector<int> lo(info.min_params.begin(), info.min_params.begin() + info.arity);
        std::vector<int> p(info.arity);
        std::vector<int> span(info.arity, 2);
        std::vector<int> idx(info.arity, 0);
        for (bool done = false; !done;) {
            for (int i = 0; i < info.arity; ++i) p[i] = lo[i] + idx[i];
            const Graph g = generate_family(info.id, p);
            CHECK(is_connected(g));
            const Graph shuffled = random_relabel(g, rng);
            INFO(info.name << " params " << detail::format_params(p));
            CHECK(has_match(recognize_families(shuffled), info.id, p));
            done = true;
            for (int i = info.arity - 1; i >= 0; --i) {
                if (++idx[i] <= span[i]) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
        }
    }
}

TEST_CASE("recognition rejects non-members") {
    CHECK(recognize_families(path_graph(10)).empty());
    CHECK(recognize_families(complete_graph(4)).empty());
    CHECK(recognize_families(star_graph(6)).empty());
    CHECK(recognize_families(Graph::from_edges(1, {})).empty());
}

TEST_CASE("extremal class prediction on named graphs") {
    CHECK(predict_extremal_class(star_graph(5)) == ExtremalClass::m);
    CHECK(predict_extremal_class(star_graph(1)) == ExtremalClass::m);  // K2
    CHECK(predict_extremal_class(path_graph(4)) == ExtremalClass::m_minus_1);
    CHECK(predict_extremal_class(cycle_graph(4)) == ExtremalClass::m_minus_2);
    CHECK(has_match(recognize_families(cycle_graph(4)), FamilyId::A5, {0}));
    CHECK(predict_extremal_class(cycle_graph(5)) == ExtremalClass::m_minus_3);
    CHECK(has_match(recognize_families(cycle_graph(5)), FamilyId::R14, {0}));
    CHECK(predict_extremal_class(complete_graph(4)) == ExtremalClass::none);
    CHECK(predict_extremal_class(path_graph(10)) == ExtremalClass::none);
    CHECK_THROWS(predict_extremal_class(Graph::from_edges(1, {})));
    CHECK_THROWS(predict_extremal_class(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("predicted classes are sound on the small corpus") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const ExtremalClass cls = predict_extremal_class(g);
            if (cls == ExtremalClass::none) continue;
            INFO("n=" << n << " g6=" << canon6(g) << " class=" << to_string(cls));
            CHECK(eop_number_exact(g).rho == extremal_rho(cls, g.edge_count()));
        }
    }
}

TEST_CASE("audit: R11 readings separate cleanly") {
    const AuditReport rep = audit_family(FamilyId::R11, 4);
    REQUIRE(rep.ambiguous);
    REQUIRE(!rep.candidates.empty());
    CHECK(rep.candidates.front().shipped);
    CHECK(rep.shipped_clean());
    CHECK(rep.candidates.front().passes == rep.candidates.front().total);

    bool saw_literal = false, saw_gap_filler = false;
    for (const AuditCandidate& cand : rep.candidates) {
        if (cand.description == "pendant edge at the pendant-cluster vertex") {
            // literal text reading reproduces A4 members: never rho = m-3
            saw_literal = true;
            CHECK(cand.passes == 0);
            CHECK(!cand.failures.empty());
            CHECK(std::find(cand.coincides_with.begin(), cand.coincides_with.end(),
                            FamilyId::A4) != cand.coincides_with.end());
        }
        if (cand.description == "two-edge path at another cycle vertex") {
            saw_gap_filler = true;
            CHECK(cand.passes == cand.total);
        }
    }
    CHECK(saw_literal);
    CHECK(saw_gap_filler);
}

TEST_CASE("audit: every ambiguous family ships a clean reading") {
    const std::vector<AuditReport> reports = audit_ambiguous_families(3);
    REQUIRE(reports.size() == 7);
    CHECK(reports.front().id == FamilyId::R11);
    CHECK(reports.back().id == FamilyId::S8);
    for (const AuditReport& rep : reports) {
        INFO(to_string(rep.id));
        CHECK(rep.ambiguous);
        CHECK(rep.shipped_clean());
    }
}

TEST_CASE("audit: corpus gap report surfaces the unlisted m-3 graphs") {
    const GapReport rep = audit_corpus_gaps(6);
    CHECK(rep.max_n == 6);
    CHECK(rep.scanned > 100);
    REQUIRE(rep.records.size() == 1);
    const GapRecord& rec = rep.records.front();
    CHECK(rec.graph == "EAMg");
    CHECK(rec.n == 6);
    CHECK(rec.m == 6);
    CHECK(rec.rho == 3);
    REQUIRE(!rec.candidate_hits.empty());
    CHECK(rec.candidate_hits.front().find("R11") != std::string::npos);
    CHECK(!rec.structure.empty());

    // the gap member is a genuine rho = m-3 graph outside every listed family
    const Graph g = parse_graph6(rec.graph);
    CHECK(eop_number_exact(g).rho == 3);
    CHECK(recognize_families(g).empty());
    CHECK(predict_extremal_class(g) == ExtremalClass::none);
}
