#include "randic/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "randic/graph6.hpp"

namespace randic {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail_bound: return "FAIL_BOUND";
        case Verdict::fail_characterization: return "FAIL_CHARACTERIZATION";
        case Verdict::empty_class: return "EMPTY_CLASS";
    }
    throw std::logic_error("unknown verdict");
}

namespace {

bool in_class(TheoremId id, int c, const InvariantProfile& p) {
    switch (id) {
        case TheoremId::chromatic_lower:
        case TheoremId::chromatic_upper:
            return p.chromatic == c;
        case TheoremId::clique_lower:
        case TheoremId::clique_upper:
            return p.clique == c;
        case TheoremId::cutedge_upper:
            return p.cut_edge_count == c;
        case TheoremId::connectivity_lower:
            return p.vertex_conn == c;
        case TheoremId::connectivity_atmost_lower:
        case TheoremId::conn_star_upper:
            return p.vertex_conn <= c;
        case TheoremId::edge_connectivity_lower:
            return p.edge_conn == c;
        case TheoremId::edge_connectivity_atmost_lower:
        case TheoremId::edgeconn_star_upper:
            return p.edge_conn <= c;
        case TheoremId::min_degree_lower:
            return p.min_deg == c;
    }
    throw std::logic_error("unknown theorem id");
}

}  // namespace

ProfileTable ProfileTable::build(const CorpusSource& source, int expected_n, int jobs) {
    jobs = std::max(jobs, 1);
    auto stream = source.open();
    ProfileTable table;
    table.n_ = expected_n;

    std::vector<Graph> batch;
    batch.reserve(512);
    auto flush = [&]() {
        if (batch.empty()) return;
        std::vector<Entry> out(batch.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                Entry e;
                e.form = canonical_form(batch[i]);
                e.g6 = graph6_encode(canonical_graph(e.form));
                e.degrees = batch[i].sorted_degrees();
                e.profile = invariant_profile(batch[i]);
                out[i] = std::move(e);
            }
        };
        if (jobs == 1 || batch.size() < 2) {
            work(0, batch.size());
        } else {
            std::vector<std::thread> workers;
            std::size_t chunk = (batch.size() + jobs - 1) / jobs;
            for (int w = 0; w < jobs; ++w) {
                std::size_t begin = w * chunk;
                if (begin >= batch.size()) break;
                workers.emplace_back(work, begin, std::min(begin + chunk, batch.size()));
            }
            for (auto& t : workers) t.join();
        }
        for (auto& e : out) table.entries_.push_back(std::move(e));
        batch.clear();
    };

    while (auto g = stream->next()) {
        if (g->order() != expected_n) {
            throw std::invalid_argument("corpus order mismatch: expected n = " +
                                        std::to_string(expected_n) + ", got n = " +
                                        std::to_string(g->order()) + " from " +
                                        source.describe());
        }
        batch.push_back(std::move(*g));
        if (batch.size() == 512) flush();
    }
    flush();

    std::sort(table.entries_.begin(), table.entries_.end(),
              [](const Entry& a, const Entry& b) { return a.form < b.form; });
    table.entries_.erase(std::unique(table.entries_.begin(), table.entries_.end(),
                                     [](const Entry& a, const Entry& b) {
                                         return a.form == b.form;
                                     }),
                         table.entries_.end());
    return table;
}

VerificationReport verify(const TheoremCase& theorem_case, const ProfileTable& table,
                          double tolerance) {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (table.order() != theorem_case.n) {
        throw std::invalid_argument("corpus order mismatch: table has n = " +
                                    std::to_string(table.order()));
    }
    BoundQuery query = theorem_case.query();
    VerificationReport report;
    report.theorem_case = theorem_case;
    report.bound = bound_value(query);

    GammaExponent gamma(theorem_case.gamma);
    bool minimize = bound_kind(theorem_case.theorem) == BoundKind::lower;

    std::vector<std::pair<double, const ProfileTable::Entry*>> members;
    for (const auto& entry : table.entries()) {
        if (!in_class(theorem_case.theorem, theorem_case.c, entry.profile)) continue;
        members.emplace_back(zeroth_order_general_randic(entry.degrees, gamma), &entry);
    }
    report.class_size = members.size();
    if (members.empty()) {
        report.verdict = Verdict::empty_class;
        return report;
    }

    double extremum = members.front().first;
    for (const auto& [value, entry] : members) {
        extremum = minimize ? std::min(extremum, value) : std::max(extremum, value);
    }
    report.extremum = extremum;
    report.gap = extremum - report.bound;

    // tie pre-scan: the smallest spread between values that are NOT ties
    // at the run tolerance, confirming ties and non-ties stay far apart
    {
        std::vector<double> values;
        values.reserve(members.size());
        for (const auto& [value, entry] : members) values.push_back(value);
        std::sort(values.begin(), values.end());
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (nearly_equal(values[i], values[i - 1], tolerance)) continue;
            min_gap = std::min(min_gap, values[i] - values[i - 1]);
        }
        report.tie_scan_min_gap = std::isfinite(min_gap) ? min_gap : 0.0;
    }

    std::vector<CanonicalForm> found_forms;
    for (const auto& [value, entry] : members) {
        if (nearly_equal(value, extremum, tolerance)) {
            found_forms.push_back(entry->form);
            report.witnesses_found.push_back(entry->g6);  // entries already sorted
        }
    }

    std::vector<CanonicalForm> expected_forms;
    {
        std::vector<std::pair<CanonicalForm, std::string>> expected;
        for (const auto& spec : extremal_witnesses(query).specs) {
            CanonicalForm form = canonical_form(generate(spec));
            expected.emplace_back(form, graph6_encode(canonical_graph(form)));
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        for (auto& [form, g6] : expected) {
            expected_forms.push_back(form);
            report.witnesses_expected.push_back(std::move(g6));
        }
    }

    if (!nearly_equal(report.extremum, report.bound, tolerance)) {
        report.verdict = Verdict::fail_bound;
    } else if (expected_forms.empty() && theorem_case.exploratory) {
        report.verdict = Verdict::pass;  // nothing to characterize off-range
    } else if (found_forms != expected_forms) {
        report.verdict = Verdict::fail_characterization;
    } else {
        report.verdict = Verdict::pass;
    }
    return report;
}

VerificationReport verify(const TheoremCase& theorem_case, const CorpusSource& source,
                          double tolerance, int jobs) {
    return verify(theorem_case, ProfileTable::build(source, theorem_case.n, jobs),
                  tolerance);
}

CorpusSource SuitePolicy::source_for(int n) const {
    if (sources.empty()) return CorpusSource::builtin(n);
    if (sources.size() != orders.size()) {
        throw std::invalid_argument("suite policy: sources must match orders one to one");
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == n) return sources[i];
    }
    throw std::invalid_argument("suite policy: no source for n = " + std::to_string(n));
}

std::vector<VerificationReport> verify_suite(const SuitePolicy& policy) {
    std::vector<int> orders = policy.orders;
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    std::vector<double> gammas = policy.gammas;
    std::sort(gammas.begin(), gammas.end());
    gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
    std::vector<TheoremId> theorems(policy.theorems);
    if (theorems.empty()) {
        theorems.assign(std::begin(all_theorems), std::end(all_theorems));
    }

    std::map<int, ProfileTable> tables;
    for (int n : orders) {
        tables.emplace(n, ProfileTable::build(policy.source_for(n), n, policy.jobs));
    }

    std::vector<VerificationReport> reports;
    for (TheoremId theorem : theorems) {
        for (int n : orders) {
            auto [c_lo, c_hi] = c_range(theorem, n);
            int sweep_hi = c_hi;
            if (theorem == TheoremId::cutedge_upper && policy.exploratory) {
                sweep_hi = n - 1;  // trees and the impossible c = n-2 class
            }
            for (int c = c_lo; c <= sweep_hi; ++c) {
                if (!policy.c_filter.empty() &&
                    std::find(policy.c_filter.begin(), policy.c_filter.end(), c) ==
                        policy.c_filter.end()) {
                    continue;
                }
                for (double gamma : gammas) {
                    bool off_range = !gamma_admissible(theorem, gamma) || c > c_hi;
                    if (off_range && !policy.exploratory) continue;
                    TheoremCase theorem_case{theorem, n, c, gamma, off_range};
                    reports.push_back(
                        verify(theorem_case, tables.at(n), policy.tolerance));
                }
            }
        }
    }
    return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.theorem_case.exploratory) continue;
        if (r.verdict == Verdict::fail_bound ||
            r.verdict == Verdict::fail_characterization) {
            return false;
        }
    }
    return true;
}

namespace {

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["theorem"] = theorem_name(r.theorem_case.theorem);
    j["n"] = r.theorem_case.n;
    j["c"] = r.theorem_case.c;
    j["gamma"] = r.theorem_case.gamma;
    j["class_size"] = r.class_size;
    if (r.verdict == Verdict::empty_class) {
        j["extremum"] = nullptr;
        j["gap"] = nullptr;
    } else {
        j["extremum"] = r.extremum;
        j["gap"] = r.gap;
    }
    j["bound"] = r.bound;
    j["witnesses_found"] = r.witnesses_found;
    j["witnesses_expected"] = r.witnesses_expected;
    j["verdict"] = verdict_name(r.verdict);
    j["exploratory"] = r.theorem_case.exploratory;
    j["tie_scan_min_gap"] = r.tie_scan_min_gap;
    return j;
}

std::string number_text(double x) { return nlohmann::json(x).dump(); }

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ';';
        out += items[i];
    }
    return out;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& r : reports) array.push_back(report_to_json(r));
    return array.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "theorem,n,c,gamma,class_size,extremum,bound,gap,"
        "witnesses_found,witnesses_expected,verdict,exploratory,tie_scan_min_gap\n";
    for (const auto& r : reports) {
        bool empty = r.verdict == Verdict::empty_class;
        out += theorem_name(r.theorem_case.theorem);
        out += ',' + std::to_string(r.theorem_case.n);
        out += ',' + std::to_string(r.theorem_case.c);
        out += ',' + number_text(r.theorem_case.gamma);
        out += ',' + std::to_string(r.class_size);
        out += ',' + (empty ? std::string() : number_text(r.extremum));
        out += ',' + number_text(r.bound);
        out += ',' + (empty ? std::string() : number_text(r.gap));
        out += ',' + joined(r.witnesses_found);
        out += ',' + joined(r.witnesses_expected);
        out += ',' + verdict_name(r.verdict);
        out += r.theorem_case.exploratory ? ",true" : ",false";
        out += ',' + number_text(r.tie_scan_min_gap);
        out += '\n';
    }
    return out;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        out << verdict_name(r.verdict) << ' ' << theorem_name(r.theorem_case.theorem)
            << " n=" << r.theorem_case.n << " c=" << r.theorem_case.c
            << " gamma=" << number_text(r.theorem_case.gamma);
        if (r.theorem_case.exploratory) out << " [exploratory]";
        out << " class_size=" << r.class_size;
        if (r.verdict != Verdict::empty_class) {
            out << " extremum=" << number_text(r.extremum)
                << " bound=" << number_text(r.bound)
                << " witnesses=" << r.witnesses_found.size() << '/'
                << r.witnesses_expected.size();
        }
        bool fail = r.verdict == Verdict::fail_bound ||
                    r.verdict == Verdict::fail_characterization;
        if (fail) {
            if (!r.theorem_case.exploratory) ++failed;
            out << " found=[" << joined(r.witnesses_found) << "]"
                << " expected=[" << joined(r.witnesses_expected) << "]";
        }
        out << '\n';
    }
    out << reports.size() << " cases, " << failed << " non-exploratory failures\n";
    return out.str();
}

}  // namespace randic
