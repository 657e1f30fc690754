#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "randic/graph6.hpp"

using namespace randic;

// Hand-expanded oracle values: "Bw" is n=3 from chr(66), edge bits
// (0,1)(0,2)(1,2) = 111 padded to 111000 = 56 -> chr(119) = 'w'.
// "Bg" is bits 101000 = 40 -> chr(103) = 'g'. "@" is n=1, no bits.
TEST_CASE("decode matches the bit-level expansion") {
    Graph k3 = graph6_decode("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph k1 = graph6_decode("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph p3 = graph6_decode("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));
}

TEST_CASE("encode matches the bit-level expansion") {
    CHECK(graph6_encode(Graph::build(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(graph6_encode(Graph::build(3, {{0, 1}, {1, 2}})) == "Bg");
    CHECK(graph6_encode(Graph::build(1, {})) == "@");
}

TEST_CASE("malformed input is rejected with the reason") {
    CHECK_THROWS_WITH_AS(graph6_decode(""), doctest::Contains("empty"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph6_decode("B"), doctest::Contains("length"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph6_decode("Bww"), doctest::Contains("length"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph6_decode("B "), doctest::Contains("invalid character"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph6_decode("~??"), doctest::Contains("long form"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(graph6_decode("?"), doctest::Contains("at least 1"),
                         std::invalid_argument);
    // K_2 plus a stray bit in the padding: 10 0001 -> chr(63+33)
    std::string bad{'A', static_cast<char>(63 + 33)};
    CHECK_THROWS_WITH_AS(graph6_decode(bad), doctest::Contains("padding"),
                         std::invalid_argument);
}

TEST_CASE("orders beyond the short form are rejected on encode") {
    CHECK_THROWS_WITH_AS(graph6_encode(Graph::build(63, {})),
                         doctest::Contains("order <= 62"), std::invalid_argument);
    CHECK(graph6_encode(Graph::build(62, {})).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("round trip is label-exact over the full small corpus") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : oracle::all_connected_graphs(n)) {
            Graph back = graph6_decode(graph6_encode(g));
            CHECK(back == g);
        }
    }
}

TEST_CASE("decode then encode reproduces canonical input bytes") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = n == 1 ? Graph::build(1, {}) : oracle::random_connected_graph(rng, n);
        std::string text = graph6_encode(g);
        CHECK(graph6_encode(graph6_decode(text)) == text);
    }
}
