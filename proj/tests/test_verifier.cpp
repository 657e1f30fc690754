#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "randic/graph6.hpp"
#include "randic/verifier.hpp"

using namespace randic;

TEST_CASE("chromatic lower bound at n=6, c=3: unique Turan witness") {
    auto report = verify({TheoremId::chromatic_lower, 6, 3, -1.0},
                         CorpusSource::builtin(6));
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.extremum == doctest::Approx(1.5).epsilon(1e-12));
    REQUIRE(report.witnesses_found.size() == 1);
    CHECK(canonical_form(graph6_decode(report.witnesses_found[0])) ==
          canonical_form(generate(FamilySpec::turan(6, 3))));
}

TEST_CASE("connectivity lower bound at n=5, c=1, gamma=-1: two extremal classes") {
    auto report = verify({TheoremId::connectivity_lower, 5, 1, -1.0},
                         CorpusSource::builtin(5));
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.extremum == doctest::Approx(2.25).epsilon(1e-12));
    REQUIRE(report.witnesses_found.size() == 2);
    CHECK(report.witnesses_found == report.witnesses_expected);
}

TEST_CASE("cut-edge upper bound at n=6, c=2, gamma=-0.5") {
    auto report = verify({TheoremId::cutedge_upper, 6, 2, -0.5},
                         CorpusSource::builtin(6));
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.extremum ==
          doctest::Approx(2 + 3 / std::sqrt(2.0) + 0.5).epsilon(1e-9));
    CHECK(report.witnesses_found.size() == 1);
}

TEST_CASE("impossible cut-edge class reports empty, not failed") {
    ProfileTable table = ProfileTable::build(CorpusSource::builtin(6), 6);
    auto report = verify({TheoremId::cutedge_upper, 6, 4, -1.0, true}, table);
    CHECK(report.verdict == Verdict::empty_class);
    CHECK(report.class_size == 0);
    std::vector<VerificationReport> reports{report};
    CHECK(all_pass(reports));
}

TEST_CASE("profile table rejects a corpus with the wrong order") {
    CHECK_THROWS_WITH_AS(ProfileTable::build(CorpusSource::builtin(4), 5),
                         doctest::Contains("order mismatch"), std::invalid_argument);
}

TEST_CASE("full suite over n=5,6 at gamma=-1 passes everywhere") {
    SuitePolicy policy;
    policy.orders = {5, 6};
    policy.gammas = {-1.0};
    policy.jobs = 2;
    auto reports = verify_suite(policy);
    CHECK(all_pass(reports));
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::pass);  // no empty classes in these sweeps
        // cross-check: witnesses re-evaluated through the families module
        // reproduce the bound independently of the bound formulas
        for (const auto& spec : extremal_witnesses(r.theorem_case.query()).specs) {
            double direct = zeroth_order_general_randic(generate(spec),
                                                        GammaExponent(r.theorem_case.gamma));
            CHECK(nearly_equal(direct, r.bound));
        }
        // real gaps dwarf the tie tolerance (0 means a single value cluster)
        CHECK((r.tie_scan_min_gap == 0.0 || r.tie_scan_min_gap > 1e-6));
    }
}

TEST_CASE("exploratory cases are flagged and excluded from the exit status") {
    SuitePolicy policy;
    policy.orders = {6};
    policy.gammas = {-0.5};
    policy.theorems = {TheoremId::chromatic_upper};
    policy.exploratory = true;
    auto reports = verify_suite(policy);
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) CHECK(r.theorem_case.exploratory);
    CHECK(all_pass(reports));  // regardless of the probe verdicts

    // without the flag the off-range cases are simply absent
    policy.exploratory = false;
    CHECK(verify_suite(policy).empty());
}

TEST_CASE("deleting an edge keeps a graph inside V_{n,c} and E_{n,c}") {
    std::mt19937 rng(23);
    for (int round = 0; round < 120; ++round) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = oracle::random_connected_graph(rng, n);
        int kappa = vertex_connectivity(g);
        int lambda = edge_connectivity(g);
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        Graph smaller = delete_edge(g, u, v);
        if (!is_connected(smaller)) continue;
        CHECK(vertex_connectivity(smaller) <= kappa);
        CHECK(edge_connectivity(smaller) <= lambda);
    }
}

TEST_CASE("tie handling is invariant under corpus permutation") {
    // feed the same corpus in shuffled file order; the witness set of a
    // multi-witness case must not move
    std::vector<std::string> lines;
    {
        auto stream = enumerate_connected(6);
        while (auto g = stream->next()) lines.push_back(graph6_encode(*g));
    }
    std::mt19937 rng(99);
    TheoremCase multi{TheoremId::connectivity_lower, 6, 1, -1.0};
    auto baseline = verify(multi, CorpusSource::builtin(6));
    REQUIRE(baseline.verdict == Verdict::pass);
    REQUIRE(baseline.witnesses_found.size() == 2);
    for (int round = 0; round < 3; ++round) {
        std::shuffle(lines.begin(), lines.end(), rng);
        auto path = std::filesystem::temp_directory_path() /
                    ("randic_shuffle_" + std::to_string(rng()) + ".g6");
        {
            std::ofstream out(path);
            for (const auto& line : lines) out << line << "\n";
        }
        auto report = verify(multi, CorpusSource::file(path));
        std::filesystem::remove(path);
        CHECK(report.witnesses_found == baseline.witnesses_found);
        CHECK(report.verdict == Verdict::pass);
    }
}

TEST_CASE("reports serialize deterministically across parallelism") {
    SuitePolicy policy;
    policy.orders = {5};
    policy.gammas = {-1.0, -0.5};
    policy.jobs = 1;
    auto first = reports_to_json(verify_suite(policy));
    policy.jobs = 4;
    auto second = reports_to_json(verify_suite(policy));
    CHECK(first == second);

    auto csv = reports_to_csv(verify_suite(policy));
    CHECK(csv.find("theorem,n,c,gamma,class_size,extremum,bound,gap") == 0);
    auto text = reports_to_text(verify_suite(policy));
    CHECK(text.find("PASS") != std::string::npos);
}
