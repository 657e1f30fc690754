#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "randic/graph.hpp"

using namespace randic;

TEST_CASE("build constructs the documented small graphs") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.degrees() == std::vector<int>{2, 2, 2});
    CHECK(k3.edge_count() == 3);

    Graph empty4 = Graph::build(4, {});
    CHECK(empty4.order() == 4);
    CHECK(empty4.edge_count() == 0);

    Graph dup = Graph::build(2, {{0, 1}, {1, 0}});
    CHECK(dup.degrees() == std::vector<int>{1, 1});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("build rejects bad input distinctly") {
    CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 3}}),
                         doctest::Contains("out of range"), std::out_of_range);
    CHECK_THROWS_WITH_AS(Graph::build(3, {{1, 1}}), doctest::Contains("self-loop"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(65, {}), std::invalid_argument);
}

TEST_CASE("edit operations return fresh values") {
    Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

    SUBCASE("delete_edge turns C4 into P4") {
        Graph p4 = delete_edge(c4, 3, 0);
        CHECK(p4.sorted_degrees() == std::vector<int>{1, 1, 2, 2});
        CHECK(c4.sorted_degrees() == std::vector<int>{2, 2, 2, 2});  // input untouched
        CHECK_THROWS_WITH_AS(delete_edge(c4, 0, 2), doctest::Contains("absent"),
                             std::invalid_argument);
    }

    SUBCASE("add_edge rejects present edges") {
        Graph plus = add_edge(c4, 0, 2);
        CHECK(plus.degree(0) == 3);
        CHECK_THROWS_WITH_AS(add_edge(c4, 0, 1), doctest::Contains("present"),
                             std::invalid_argument);
    }

    SUBCASE("delete_vertices relabels the remainder") {
        std::vector<Vertex> s{1};
        Graph rest = delete_vertices(c4, s);
        CHECK(rest.order() == 3);
        CHECK(rest.sorted_degrees() == std::vector<int>{1, 1, 2});
        std::vector<Vertex> all{0, 1, 2, 3};
        CHECK_THROWS_WITH_AS(delete_vertices(c4, all),
                             doctest::Contains("all vertices"), std::invalid_argument);
    }

    SUBCASE("complement of K4 is empty") {
        Graph k4 = add_edge(add_edge(c4, 0, 2), 1, 3);
        CHECK(complement(k4).edge_count() == 0);
    }
}

TEST_CASE("join adds every cross edge") {
    Graph k2 = Graph::build(2, {{0, 1}});
    Graph k1_k2 = disjoint_union(Graph::build(1, {}), k2);
    Graph joined = join(k2, k1_k2);
    CHECK(joined.order() == 5);
    CHECK(joined.sorted_degrees() == std::vector<int>{2, 3, 3, 4, 4});
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(is_connected(disjoint_union(Graph::build(1, {}), Graph::build(2, {{0, 1}}))));
    CHECK(is_connected(Graph::build(1, {})));
}

TEST_CASE("adjacency stays symmetric and irreflexive through random edits") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_connected_graph(rng, n);
        // one random edit of each applicable kind
        auto edges = g.edges();
        if (!edges.empty()) {
            auto [u, v] = edges[rng() % edges.size()];
            g = delete_edge(g, u, v);
        }
        for (Vertex u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (Vertex v = u + 1; v < g.order(); ++v) {
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
            }
        }
        int degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum % 2 == 0);
    }
}

TEST_CASE("canonical form identifies isomorphic graphs") {
    Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph k22 = Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(canonical_form(c4) == canonical_form(k22));

    Graph p4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph s4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(p4) != canonical_form(s4));

    CHECK_THROWS_WITH_AS(canonical_form(Graph::build(13, {})),
                         doctest::Contains("order <= 12"), std::invalid_argument);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    for (int round = 0; round < 1000; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
        Graph g = oracle::random_connected_graph(rng, n);
        auto perm = oracle::random_permutation(rng, n);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
}

TEST_CASE("canonical forms separate the 21 connected classes on five vertices") {
    std::vector<CanonicalForm> forms;
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = oracle::graph_from_mask(5, mask);
        if (is_connected(g)) forms.push_back(canonical_form(g));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    CHECK(forms.size() == 21);
    CHECK(forms.size() == oracle::connected_class_count(5));
}

TEST_CASE("canonical_graph rebuilds the representative") {
    std::mt19937 rng(99);
    for (int round = 0; round < 100; ++round) {
        Graph g = oracle::random_connected_graph(rng, 6);
        CanonicalForm form = canonical_form(g);
        Graph rep = canonical_graph(form);
        CHECK(canonical_form(rep) == form);
        CHECK(oracle::isomorphic(g, rep));
    }
}
