#ifndef RANDIC_BOUNDS_HPP
#define RANDIC_BOUNDS_HPP

#include <string>
#include <vector>

#include "randic/families.hpp"
#include "randic/invariants.hpp"

namespace randic {

enum class TheoremId {
    chromatic_lower,
    chromatic_upper,
    clique_lower,
    clique_upper,
    cutedge_upper,
    connectivity_lower,
    connectivity_atmost_lower,
    edge_connectivity_lower,
    edge_connectivity_atmost_lower,
    min_degree_lower,
    conn_star_upper,
    edgeconn_star_upper,
};

inline constexpr TheoremId all_theorems[] = {
    TheoremId::chromatic_lower,
    TheoremId::chromatic_upper,
    TheoremId::clique_lower,
    TheoremId::clique_upper,
    TheoremId::cutedge_upper,
    TheoremId::connectivity_lower,
    TheoremId::connectivity_atmost_lower,
    TheoremId::edge_connectivity_lower,
    TheoremId::edge_connectivity_atmost_lower,
    TheoremId::min_degree_lower,
    TheoremId::conn_star_upper,
    TheoremId::edgeconn_star_upper,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

enum class BoundKind { lower, upper };
BoundKind bound_kind(TheoremId id);

// gamma < 0 | gamma <= -1 | -1 <= gamma < 0
enum class GammaRange { negative, at_most_minus_one, unit_negative };
GammaRange gamma_range(TheoremId id);
bool gamma_admissible(TheoremId id, double gamma);
std::string gamma_range_text(GammaRange range);

// Inclusive admissible c interval for the theorem at order n.
std::pair<int, int> c_range(TheoremId id, int n);

/// One theorem instance. With `exploratory` set, range checks are
/// skipped and the closed form is evaluated outside the proven region
/// without asserting extremality.
struct BoundQuery {
    TheoremId theorem;
    int n = 0;
    int c = 0;
    double gamma = 0.0;
    bool exploratory = false;

    int q() const { return n / c; }
    int r() const { return n - c * q(); }
};

struct ExtremalCharacterization {
    std::vector<FamilySpec> specs;  // empty only for exploratory queries
};

double bound_value(const BoundQuery& query);
ExtremalCharacterization extremal_witnesses(const BoundQuery& query);

// psi(x) = (n-x) x^gamma - (n-x+1) (x-1)^gamma, strictly increasing on
// [2, n] for gamma < 0. Real-valued x; x < 2 is rejected (the (x-1)^gamma
// term is singular at x = 1).
double psi(double x, int n, GammaExponent gamma);

// f(x) = x (x+c-1)^gamma + (n-c-x) (n-1-x)^gamma on [1, n-c-1] for
// -1 <= gamma < 0; minimal at the ends, identically 2 for c = 1,
// gamma = -1.
double lemma_f(double x, int n, int c, GammaExponent gamma);

struct ChainCheckResult {
    bool strictly_decreasing = false;
    std::vector<double> margins;  // index i-1 entry: step i of 2..c_max
};

// Checks the split-graph chain: the index of K_i+(K_1 u K_{n-i-1}) drops
// strictly as i grows, for 2 <= i <= c_max.
ChainCheckResult chain_inequality_check(int n, int c_max, GammaExponent gamma);

}  // namespace randic

#endif  // RANDIC_BOUNDS_HPP
