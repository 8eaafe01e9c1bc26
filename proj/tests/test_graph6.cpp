#include <catch2/catch_amalgamated.hpp>

#include "eop/graph6.hpp"
#include "testutil.hpp"

using namespace eop;

namespace {

// reference encoder written directly against the format definition: upper
// triangle in column order, 6-bit groups MSB first, +63 per byte
std::string encode_by_hand(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(g.vertex_count() + 63));
    for (size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (size_t b = 0; b < 6; ++b) val = val * 2 + (bits[k + b] == '1');
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 fixed encodings") {
    REQUIRE(write_graph6(complete_graph(3)) == "Bw");
    REQUIRE(write_graph6(Graph::from_edges(0, {})) == "?");
    REQUIRE(write_graph6(Graph::from_edges(1, {})) == "@");
    REQUIRE(write_graph6(Graph::from_edges(2, {})) == "A?");
    REQUIRE(write_graph6(complete_graph(2)) == "A_");
    // P4 bits: x(0,1)=1 x(0,2)=0 x(1,2)=1 x(0,3)=0 x(1,3)=0 x(2,3)=1 -> 101001
    REQUIRE(write_graph6(path_graph(4)) == std::string(1, 'C') + static_cast<char>(41 + 63));
}

TEST_CASE("graph6 matches a by-hand encoder on assorted graphs") {
    std::mt19937 rng(7);
    for (int n = 0; n <= 12; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            Graph g = random_graph(n, 0.4, rng);
            REQUIRE(write_graph6(g) == encode_by_hand(g));
        }
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(11);
    for (int n : {0, 1, 2, 5, 13, 33, 62})
        for (int rep = 0; rep < 8; ++rep) {
            Graph g = random_graph(n, 0.3, rng);
            Graph back = parse_graph6(write_graph6(g));
            REQUIRE(back.vertex_count() == g.vertex_count());
            REQUIRE(back.edges() == g.edges());
            REQUIRE(write_graph6(back) == write_graph6(g));
        }
}

TEST_CASE("graph6 input accepts the optional header") {
    Graph g = parse_graph6(">>graph6<<Bw");
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3);
    // output never carries the header
    REQUIRE(write_graph6(g) == "Bw");
}

TEST_CASE("graph6 parse errors") {
    REQUIRE_THROWS_AS(parse_graph6(""), ParseError);
    REQUIRE_THROWS_AS(parse_graph6("Bw extra"), ParseError);   // ' ' out of range
    REQUIRE_THROWS_AS(parse_graph6("Bww"), ParseError);        // bad length
    REQUIRE_THROWS_AS(parse_graph6("B"), ParseError);          // truncated
    REQUIRE_THROWS_AS(parse_graph6("~??"), ParseError);        // extended header
    REQUIRE_THROWS_AS(parse_graph6(std::string(1, '\x1f')), ParseError);
    REQUIRE_THROWS_AS(write_graph6(Graph::from_edges(63, {})), std::invalid_argument);
    REQUIRE_NOTHROW(write_graph6(Graph::from_edges(62, {})));
}
