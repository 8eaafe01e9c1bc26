#include <catch2/catch_amalgamated.hpp>

#include "eop/canonical.hpp"
#include "eop/enumerate.hpp"
#include "eop/packing.hpp"
#include "testutil.hpp"

using namespace eop;

TEST_CASE("have_common_edge on the canonical little graphs") {
    Graph p4 = path_graph(4);  // edges 0:(0,1) 1:(1,2) 2:(2,3)
    int w = -1;
    REQUIRE(have_common_edge(p4, 0, 2, &w));
    REQUIRE(w == 1);
    REQUIRE_FALSE(have_common_edge(p4, 0, 1));
    REQUIRE_FALSE(have_common_edge(p4, 1, 2));

    Graph star = star_graph(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) REQUIRE_FALSE(have_common_edge(star, i, j));

    Graph c3 = cycle_graph(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) REQUIRE(have_common_edge(c3, i, j));

    REQUIRE_THROWS_AS(have_common_edge(p4, 0, 9), std::invalid_argument);
}

TEST_CASE("common edge relation matches the three-edge shape test") {
    // equivalent formulation: some edge e meeting both d1 and d2 spans a
    // subgraph isomorphic to P4 or C3 together with them
    Graph p4ref = path_graph(4);
    Graph c3ref = cycle_graph(3);
    std::mt19937 rng(41);
    std::vector<Graph> pool;
    for (const Graph& g : enumerate_connected_graphs(5)) pool.push_back(g);
    for (int rep = 0; rep < 10; ++rep) pool.push_back(random_graph(6, 0.45, rng));
    for (const Graph& g : pool) {
        for (int i = 0; i < g.edge_count(); ++i)
            for (int j = i + 1; j < g.edge_count(); ++j) {
                bool direct = have_common_edge(g, i, j);
                bool shape = false;
                for (int e = 0; e < g.edge_count() && !shape; ++e) {
                    if (e == i || e == j) continue;
                    const Edge a = g.edge(i), b = g.edge(j), c = g.edge(e);
                    bool meets_i = (c.u == a.u || c.u == a.v || c.v == a.u || c.v == a.v);
                    bool meets_j = (c.u == b.u || c.u == b.v || c.v == b.u || c.v == b.v);
                    if (!meets_i || !meets_j) continue;
                    Graph sub = edge_induced_subgraph(g, {i, e, j}).graph;
                    shape = are_isomorphic(sub, p4ref) || are_isomorphic(sub, c3ref);
                }
                REQUIRE(direct == shape);
            }
    }
}

TEST_CASE("conflict graphs of the landmark hosts") {
    REQUIRE(conflict_graph(star_graph(5)).edge_count() == 0);
    REQUIRE(are_isomorphic(conflict_graph(cycle_graph(5)), cycle_graph(5)));
    REQUIRE(are_isomorphic(conflict_graph(cycle_graph(3)), complete_graph(3)));
    Graph p4c = conflict_graph(path_graph(4));
    REQUIRE(p4c.vertex_count() == 3);
    REQUIRE(p4c.edge_count() == 1);
    // in a complete graph every pair of edges conflicts
    Graph k4c = conflict_graph(complete_graph(4));
    REQUIRE(k4c.edge_count() == 6 * 5 / 2);
}

TEST_CASE("is_eop_set") {
    Graph c5 = cycle_graph(5);  // ids 0:(0,1) 1:(0,4) 2:(1,2) 3:(2,3) 4:(3,4)
    REQUIRE(is_eop_set(c5, {0, 1}));
    REQUIRE(is_eop_set(c5, {}));
    REQUIRE(is_eop_set(c5, {3}));
    EopViolation v{};
    REQUIRE_FALSE(is_eop_set(c5, {0, 3}, &v));
    REQUIRE(v.e1 == 0);
    REQUIRE(v.e2 == 3);
    REQUIRE(v.common_edge == 2);
    REQUIRE_THROWS_AS(is_eop_set(c5, {0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(is_eop_set(c5, {-1}), std::invalid_argument);
}

TEST_CASE("star decomposition of valid sets") {
    Graph p6 = path_graph(6);  // ids i:(i,i+1)
    auto sd = star_decomposition(p6, {0, 3, 4});
    REQUIRE(sd.components.size() == 2);
    REQUIRE(sd.shape == std::vector<int>{1, 2});
    // the K2 component admits both endpoints as centre
    REQUIRE(sd.components[0].centre_choices == std::vector<int>{0, 1});
    REQUIRE(sd.components[1].centre == 4);
    REQUIRE(sd.components[1].centre_choices == std::vector<int>{4});

    Graph star = star_graph(4);
    auto sd2 = star_decomposition(star, {0, 1, 2, 3});
    REQUIRE(sd2.components.size() == 1);
    REQUIRE(sd2.shape == std::vector<int>{4});
    REQUIRE(sd2.components[0].centre == 0);
}

TEST_CASE("star decomposition rejects non-star components") {
    Graph p4 = path_graph(4);
    REQUIRE_THROWS_AS(star_decomposition(p4, {0, 1, 2}), NotDisjointStarsError);
    Graph c3 = cycle_graph(3);
    REQUIRE_THROWS_AS(star_decomposition(c3, {0, 1, 2}), NotDisjointStarsError);
}

TEST_CASE("every enumerated EOP set decomposes into disjoint stars") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
        for_each_eop_set(g, [&](const std::vector<int>& d) {
            REQUIRE(is_eop_set(g, d));
            REQUIRE_NOTHROW(star_decomposition(g, d));
        });
    }
}

TEST_CASE("enumerate_eop_sets") {
    REQUIRE(enumerate_eop_sets(cycle_graph(5), 2).size() == 5);
    REQUIRE(enumerate_eop_sets(star_graph(3), 3).size() == 1);
    REQUIRE(enumerate_eop_sets(complete_graph(4), 2).empty());
    REQUIRE(enumerate_eop_sets(cycle_graph(5), 0).size() == 1);
    auto sets = enumerate_eop_sets(cycle_graph(5), 2);
    // ascending lexicographic order by edge ids
    for (size_t i = 0; i + 1 < sets.size(); ++i) REQUIRE(sets[i] < sets[i + 1]);
    REQUIRE(sets.front() == std::vector<int>{0, 1});
}

TEST_CASE("enumerate_induced_matchings") {
    auto ms = enumerate_induced_matchings(path_graph(6), 2);
    REQUIRE(ms == std::vector<std::vector<int>>{{0, 3}, {0, 4}, {1, 4}});
    REQUIRE(enumerate_induced_matchings(cycle_graph(3), 1).size() == 3);
    REQUIRE(enumerate_induced_matchings(cycle_graph(3), 2).empty());
    // induced matchings are EOP sets made of disjoint edges
    for (const Graph& g : enumerate_connected_graphs(5)) {
        for (int size = 1; size <= 2; ++size)
            for (const auto& m : enumerate_induced_matchings(g, size)) {
                REQUIRE(is_eop_set(g, m));
                auto sd = star_decomposition(g, m);
                for (int leaves : sd.shape) REQUIRE(leaves == 1);
            }
    }
}

TEST_CASE("removing an edge only removes conflicts") {
    std::mt19937 rng(43);
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = random_graph(6, 0.5, rng);
        if (g.edge_count() < 2) continue;
        int drop = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
        std::vector<std::pair<int, int>> kept;
        std::vector<int> old_id;
        for (int e = 0; e < g.edge_count(); ++e)
            if (e != drop) {
                kept.emplace_back(g.edge(e).u, g.edge(e).v);
                old_id.push_back(e);
            }
        Graph h = Graph::from_edges(g.vertex_count(), kept);
        for (int i = 0; i < h.edge_count(); ++i)
            for (int j = i + 1; j < h.edge_count(); ++j)
                if (have_common_edge(h, i, j))
                    REQUIRE(have_common_edge(g, old_id[i], old_id[j]));
    }
}
