#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "eop/builders.hpp"
#include "eop/conditions.hpp"
#include "eop/enumerate.hpp"
#include "eop/graph6.hpp"
#include "eop/solver.hpp"
#include "testutil.hpp"

using namespace eop;

namespace {

Graph spider(std::initializer_list<int> legs) {
    GraphBuilder b;
    int hub = b.add_vertex();
    for (int len : legs) b.attach_path(hub, len);
    return b.build();
}

bool valid_induced_matching(const Graph& g, const std::vector<int>& m) {
    if (!is_eop_set(g, m)) return false;
    std::vector<int> seen;
    for (int id : m) {
        seen.push_back(g.edge(id).u);
        seen.push_back(g.edge(id).v);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace

TEST_CASE("c1 bounds the diameter") {
    CHECK(check_c1(path_graph(6), 3).holds);       // diam 5
    CHECK(check_c1(path_graph(7), 3).holds);       // diam 6
    CHECK_FALSE(check_c1(path_graph(8), 3).holds); // diam 7
    CHECK_FALSE(check_c1(complete_graph(4), 3).holds);  // diam 1 < 2
    CHECK(check_c1(path_graph(8), 4).holds);
    auto v = check_c1(cycle_graph(5), 2);
    CHECK(v.holds);
    CHECK(v.diam == 2);
}

TEST_CASE("c2 rejects large induced stars") {
    CHECK(check_c2(star_graph(3), 3).holds);
    auto v = check_c2(star_graph(4), 3);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.star.has_value());
    CHECK(v.star->centre == 0);
    CHECK(v.star->leaves.size() == 4);
    // K4 minus an edge has max degree 3 but no independent triple around it
    CHECK(check_c2(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2).holds);
    CHECK_FALSE(check_c2(star_graph(3), 2).holds);
}

TEST_CASE("c3 fails on long paths with a sparse tail") {
    auto v = check_c3(path_graph(10), 3);
    REQUIRE_FALSE(v.holds);
    CHECK_FALSE(v.vacuous);
    const Graph g = path_graph(10);
    REQUIRE(v.matching.size() == 3);
    CHECK(valid_induced_matching(g, v.matching));
    std::vector<int> vm = saturated_vertices(g, v.matching);
    CHECK_FALSE(std::binary_search(vm.begin(), vm.end(), v.z));
    int cnt = 0;
    for (int w : g.neighbors(v.z))
        if (std::binary_search(vm.begin(), vm.end(), w)) ++cnt;
    CHECK(cnt < 2);
}

TEST_CASE("c3 is vacuous when no induced matching reaches size t") {
    auto v = check_c3(path_graph(6), 3);  // only size-3 matching is not induced
    CHECK(v.holds);
    CHECK(v.vacuous);
    auto w = check_c3(star_graph(5), 2);
    CHECK(w.holds);
    CHECK(w.vacuous);
}

TEST_CASE("c4 fails on the (1,1,4) spider at t=3") {
    const Graph g = spider({1, 1, 4});
    auto v = check_c4(g, 3);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.eop_set.size() == 3);
    CHECK(is_eop_set(g, v.eop_set));
    StarDecomposition sd = star_decomposition(g, v.eop_set);
    int s = static_cast<int>(sd.components.size());
    CHECK(2 <= s);
    CHECK(s <= 2);
    std::vector<int> vd = saturated_vertices(g, v.eop_set);
    CHECK_FALSE(std::binary_search(vd.begin(), vd.end(), v.z));
    CHECK(g.adjacent(v.z, v.centre));
    for (int w : g.neighbors(v.z))
        if (w != v.centre) CHECK_FALSE(std::binary_search(vd.begin(), vd.end(), w));
}

TEST_CASE("c4 holds on P6 at t=3") {
    const Graph g = path_graph(6);
    auto v = check_c4(g, 3);
    CHECK(v.holds);
    CHECK_FALSE(v.vacuous);
    // exactly two size-3 sets qualify, both splitting into two stars
    auto sets = enumerate_eop_sets(g, 3);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == std::vector<int>{0, 1, 4});
    CHECK(sets[1] == std::vector<int>{0, 3, 4});
    for (const auto& d : sets) CHECK(star_decomposition(g, d).components.size() == 2);
}

TEST_CASE("c4 is vacuous at t=2") {
    auto v = check_c4(path_graph(5), 2);
    CHECK(v.holds);
    CHECK(v.vacuous);
}

TEST_CASE("window prediction matches the exact value on small graphs") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const Graph cg = conflict_graph(g);
            int rho = eop_number_exact(g, &cg).rho;
            for (int t = 2; t <= 5; ++t) {
                CAPTURE(n, write_graph6(g), t, rho);
                CHECK(predict_rho_window(g, t, &cg) == (2 <= rho && rho <= t));
            }
        }
}

TEST_CASE("window prediction on named graphs") {
    CHECK(predict_rho_window(path_graph(3), 2));
    CHECK(predict_rho_window(cycle_graph(5), 2));
    CHECK_FALSE(predict_rho_window(complete_graph(4), 2));  // rho 1
    CHECK_FALSE(predict_rho_window(path_graph(8), 3));      // rho 4
    CHECK(predict_rho_window(path_graph(8), 4));
    CHECK(predict_rho_window(path_graph(8), 9));
}

TEST_CASE("rho equals t via consecutive windows") {
    CHECK(predict_rho_equals_t(path_graph(6), 3));
    CHECK_FALSE(predict_rho_equals_t(path_graph(6), 4));
    CHECK(predict_rho_equals_t(spider({1, 1, 4}), 4));
    CHECK_FALSE(predict_rho_equals_t(spider({1, 1, 4}), 3));
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            if (is_star(g)) continue;
            const Graph cg = conflict_graph(g);
            int rho = eop_number_exact(g, &cg).rho;
            for (int t = 3; t <= 5; ++t) {
                CAPTURE(n, write_graph6(g), t, rho);
                CHECK(predict_rho_equals_t(g, t, &cg) == (rho == t));
            }
        }
}

TEST_CASE("rho equals t rejects bad input") {
    CHECK_THROWS_AS(predict_rho_equals_t(path_graph(6), 2), std::invalid_argument);
    CHECK_THROWS_AS(predict_rho_equals_t(star_graph(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(predict_rho_equals_t(star_graph(3), 4), std::invalid_argument);
    CHECK_NOTHROW(predict_rho_equals_t(star_graph(3), 3));  // s = t allowed
    CHECK(predict_rho_equals_t(star_graph(3), 3));
}

TEST_CASE("rho2 characterization on named graphs") {
    CHECK(check_rho2(cycle_graph(5)).holds);
    CHECK(check_rho2(path_graph(4)).holds);
    CHECK(check_rho2(path_graph(3)).holds);
    CHECK_FALSE(check_rho2(complete_graph(4)).holds);  // diameter 1
    CHECK_FALSE(check_rho2(star_graph(7)).holds);      // induced claw
    CHECK_FALSE(check_rho2(path_graph(8)).holds);      // diameter 7
    CHECK_FALSE(check_rho2(path_graph(2)).holds);
    CHECK(check_rho2(complete_graph(4)).reason.find("diameter") != std::string::npos);
    CHECK(check_rho2(star_graph(7)).reason.find("K_{1,3}") != std::string::npos);
}

TEST_CASE("rho2 agrees with the window and the solver") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const Graph cg = conflict_graph(g);
            int rho = eop_number_exact(g, &cg).rho;
            CAPTURE(n, write_graph6(g), rho);
            bool direct = check_rho2(g).holds;
            CHECK(direct == (rho == 2));
            CHECK(direct == predict_rho_window(g, 2, &cg));
        }
}

TEST_CASE("condition checks validate their input") {
    const Graph two = disjoint_union(path_graph(2), path_graph(2));
    CHECK_THROWS_AS(check_c1(path_graph(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(check_conditions(two, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_rho2(two), std::invalid_argument);
}

TEST_CASE("condition report aggregates the four verdicts") {
    auto r = check_conditions(path_graph(6), 3);
    CHECK(r.t == 3);
    CHECK(r.c1.holds);
    CHECK(r.c1.diam == 5);
    CHECK(r.c2.holds);
    CHECK(r.c3.holds);
    CHECK(r.c3.vacuous);
    CHECK(r.c4.holds);
    CHECK(r.window());
    auto bad = check_conditions(path_graph(10), 3);
    CHECK_FALSE(bad.c1.holds);
    CHECK_FALSE(bad.c3.holds);
    CHECK_FALSE(bad.window());
}
