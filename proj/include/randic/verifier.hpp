#ifndef RANDIC_VERIFIER_HPP
#define RANDIC_VERIFIER_HPP

#include <string>
#include <vector>

#include "randic/bounds.hpp"
#include "randic/enumeration.hpp"
#include "randic/invariants.hpp"

namespace randic {

/// One theorem instance to check against a corpus: the graph class is
/// implied by the theorem (chromatic = c, clique = c, c cut edges,
/// connectivity = c or <= c, and so on).
struct TheoremCase {
    TheoremId theorem;
    int n = 0;
    int c = 0;
    double gamma = 0.0;
    bool exploratory = false;

    BoundQuery query() const { return {theorem, n, c, gamma, exploratory}; }
};

enum class Verdict { pass, fail_bound, fail_characterization, empty_class };
std::string verdict_name(Verdict v);

struct VerificationReport {
    TheoremCase theorem_case;
    std::size_t class_size = 0;
    double extremum = 0.0;  // meaningless when the class is empty
    double bound = 0.0;
    double gap = 0.0;       // extremum - bound
    std::vector<std::string> witnesses_found;     // canonical-labeling graph6
    std::vector<std::string> witnesses_expected;  // canonical-labeling graph6
    Verdict verdict = Verdict::empty_class;
    // smallest nonzero index spread seen inside the class, as a record
    // that the tie tolerance is far below the real gaps
    double tie_scan_min_gap = 0.0;
};

/// Per-corpus cache of everything the seven sweeps share: one entry per
/// isomorphism class with its degrees and invariant profile, sorted by
/// canonical form. Entries are summaries; the corpus itself is never
/// materialized.
class ProfileTable {
public:
    struct Entry {
        CanonicalForm form;
        std::string g6;            // canonical labeling
        std::vector<int> degrees;  // ascending
        InvariantProfile profile;
    };

    // Pulls the stream in batches, profiles graphs on `jobs` workers and
    // merges deterministically (sorted by canonical form, duplicate
    // classes collapsed). Every graph must have the expected order.
    static ProfileTable build(const CorpusSource& source, int expected_n, int jobs = 1);

    int order() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }

private:
    int n_ = 0;
    std::vector<Entry> entries_;
};

VerificationReport verify(const TheoremCase& theorem_case, const ProfileTable& table,
                          double tolerance = default_tolerance);
// Convenience form matching the one-shot CLI path.
VerificationReport verify(const TheoremCase& theorem_case, const CorpusSource& source,
                          double tolerance = default_tolerance, int jobs = 1);

struct SuitePolicy {
    std::vector<int> orders;
    std::vector<double> gammas;
    std::vector<TheoremId> theorems;  // empty = all
    std::vector<int> c_filter;        // empty = every c in range
    bool exploratory = false;  // adds off-range gamma cases and cut-edge
                               // classes c in {n-2, n-1}, all flagged
    double tolerance = default_tolerance;
    int jobs = 1;
    // corpus per order; builtin when absent
    std::vector<CorpusSource> sources;

    CorpusSource source_for(int n) const;
};

// One report per (theorem, n, c, gamma) with c in the theorem's range,
// ordered by (theorem, n, c, gamma).
std::vector<VerificationReport> verify_suite(const SuitePolicy& policy);

// No FAIL verdict among non-exploratory reports (empty classes are
// reported, not failed).
bool all_pass(const std::vector<VerificationReport>& reports);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace randic

#endif  // RANDIC_VERIFIER_HPP
