#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/graph6.hpp"
#include "randic/invariants.hpp"

using namespace randic;

TEST_CASE("generated families carry the documented degree multisets") {
    Graph t73 = generate(FamilySpec::turan(7, 3));
    CHECK(t73.sorted_degrees() == std::vector<int>{4, 4, 4, 5, 5, 5, 5});
    CHECK(zeroth_order_general_randic(t73, GammaExponent(-1.0)) ==
          doctest::Approx(1.55).epsilon(1e-12));

    Graph pa63 = generate(FamilySpec::pineapple(6, 3));
    CHECK(pa63.sorted_degrees() == std::vector<int>{1, 1, 1, 2, 2, 5});
    CHECK(zeroth_order_general_randic(pa63, GammaExponent(-1.0)) ==
          doctest::Approx(4.2).epsilon(1e-12));

    Graph c24 = generate(FamilySpec::pendant_cycle(6, 2));
    CHECK(c24.sorted_degrees() == std::vector<int>{1, 1, 2, 2, 2, 4});
    CHECK(zeroth_order_general_randic(c24, GammaExponent(-1.0)) ==
          doctest::Approx(3.75).epsilon(1e-12));

    Graph split = generate(FamilySpec::connectivity_split(5, 1, 2));
    CHECK(split.sorted_degrees() == std::vector<int>{2, 2, 2, 2, 4});
    CHECK(zeroth_order_general_randic(split, GammaExponent(-1.0)) ==
          doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("predicted_index closed forms") {
    CHECK(predicted_index(FamilySpec::turan(7, 3), GammaExponent(-1.0)) ==
          doctest::Approx(1.55).epsilon(1e-12));
    // star: (n-1) + (n-1)^gamma
    CHECK(predicted_index(FamilySpec::star(6), GammaExponent(-1.0)) ==
          doctest::Approx(5.2).epsilon(1e-12));
    CHECK(predicted_index(FamilySpec::pineapple(6, 3), GammaExponent(-1.0)) ==
          doctest::Approx(4.2).epsilon(1e-12));
}

TEST_CASE("spec validation rejects inconsistent parameters") {
    CHECK_THROWS_AS(FamilySpec::turan(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::pineapple(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::pendant_cycle(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::connectivity_split(5, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::star_clique(6, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::multipartite({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::cycle(2), std::invalid_argument);
}

TEST_CASE("direct index equals predicted index for every family, n <= 12") {
    const double gammas[] = {-2.0, -1.0, -0.5, -0.1};
    std::vector<FamilySpec> specs;
    for (int n = 3; n <= 12; ++n) {
        specs.push_back(FamilySpec::complete(n));
        specs.push_back(FamilySpec::cycle(n));
        specs.push_back(FamilySpec::path(n));
        specs.push_back(FamilySpec::star(n));
        for (int c = 2; c <= n; ++c) {
            specs.push_back(FamilySpec::turan(n, c));
            specs.push_back(FamilySpec::pineapple(n, c));
            specs.push_back(FamilySpec::kite(n, c));
        }
        for (int c = 1; c <= n - 3; ++c) specs.push_back(FamilySpec::pendant_cycle(n, c));
        for (int c = 1; c <= n - 2; ++c) {
            for (int n1 = 1; n1 <= (n - c) / 2; ++n1) {
                specs.push_back(FamilySpec::connectivity_split(n, c, n1));
            }
        }
        if (n >= 5) {
            specs.push_back(FamilySpec::star_clique(n, {n - 4, 1, 0}));
            specs.push_back(FamilySpec::multipartite({n - 3, 2, 1}));
        }
    }
    for (const auto& spec : specs) {
        Graph g = generate(spec);
        for (double gamma : gammas) {
            GammaExponent exponent(gamma);
            double direct = zeroth_order_general_randic(g, exponent);
            double predicted = predicted_index(spec, exponent);
            CHECK_MESSAGE(nearly_equal(direct, predicted),
                          spec.describe(), " gamma=", gamma);
        }
    }
}

TEST_CASE("structural invariants of the generators") {
    for (int n = 4; n <= 9; ++n) {
        for (int c = 2; c < n; ++c) {
            Graph t = generate(FamilySpec::turan(n, c));
            CHECK(chromatic_number(t) == c);
            CHECK(clique_number(t) == c);
            Graph pa = generate(FamilySpec::pineapple(n, c));
            CHECK(chromatic_number(pa) == c);
            Graph kite = generate(FamilySpec::kite(n, c));
            CHECK(clique_number(kite) == c);
            if (c >= 3) {  // at c = 2 the kite is a path and the K_2 edge is a bridge too
                CHECK(cut_edges(kite).size() == static_cast<std::size_t>(n - c));
            }
        }
        for (int c = 1; c <= n - 3; ++c) {
            Graph pc = generate(FamilySpec::pendant_cycle(n, c));
            CHECK(cut_edges(pc).size() == static_cast<std::size_t>(c));
        }
        for (int c = 1; c <= n - 2; ++c) {
            Graph sp = generate(FamilySpec::connectivity_split(n, c, 1));
            CHECK(vertex_connectivity(sp) == c);
            CHECK(edge_connectivity(sp) == c);
        }
    }
}

TEST_CASE("all generated families are connected (multipartite c = 1 aside)") {
    CHECK(is_connected(generate(FamilySpec::turan(9, 4))));
    CHECK(is_connected(generate(FamilySpec::pineapple(9, 4))));
    CHECK(is_connected(generate(FamilySpec::pendant_cycle(9, 3))));
    CHECK(is_connected(generate(FamilySpec::kite(9, 4))));
    CHECK(is_connected(generate(FamilySpec::connectivity_split(9, 2, 3))));
    // the one sanctioned disconnected output: the empty graph
    Graph empty = generate(FamilySpec::multipartite({4}));
    CHECK(empty.edge_count() == 0);
    CHECK_FALSE(is_connected(empty));
}

TEST_CASE("clique-with-pendants degenerate cases collapse as defined") {
    // S_n(0,...,0) = K_c and S_n(n-c,0,...,0) = PA_n(c), label for label
    CHECK(generate(FamilySpec::star_clique(4, {0, 0, 0, 0})) ==
          generate(FamilySpec::complete(4)));
    CHECK(generate(FamilySpec::star_clique(7, {4, 0, 0})) ==
          generate(FamilySpec::pineapple(7, 3)));
    // the star is the c = 2 pineapple
    CHECK(generate(FamilySpec::pineapple(6, 2)) == generate(FamilySpec::star(6)));
}

TEST_CASE("turan part sizes differ by at most one") {
    for (int n = 1; n <= 12; ++n) {
        for (int c = 1; c <= n; ++c) {
            auto parts = turan_parts(n, c);
            CHECK(parts.size() == static_cast<std::size_t>(c));
            CHECK(parts.front() - parts.back() <= 1);
            int total = 0;
            for (int p : parts) total += p;
            CHECK(total == n);
        }
    }
}

TEST_CASE("generation is byte-identical across calls") {
    auto spec = FamilySpec::connectivity_split(9, 2, 3);
    std::string first = graph6_encode(generate(spec));
    for (int round = 0; round < 5; ++round) {
        CHECK(graph6_encode(generate(spec)) == first);
    }
}
