#include "randic/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace randic {

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::chromatic_lower: return "chromatic_lower";
        case TheoremId::chromatic_upper: return "chromatic_upper";
        case TheoremId::clique_lower: return "clique_lower";
        case TheoremId::clique_upper: return "clique_upper";
        case TheoremId::cutedge_upper: return "cutedge_upper";
        case TheoremId::connectivity_lower: return "connectivity_lower";
        case TheoremId::connectivity_atmost_lower: return "connectivity_atmost_lower";
        case TheoremId::edge_connectivity_lower: return "edge_connectivity_lower";
        case TheoremId::edge_connectivity_atmost_lower: return "edge_connectivity_atmost_lower";
        case TheoremId::min_degree_lower: return "min_degree_lower";
        case TheoremId::conn_star_upper: return "conn_star_upper";
        case TheoremId::edgeconn_star_upper: return "edgeconn_star_upper";
    }
    throw std::logic_error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id : all_theorems) {
        if (theorem_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown theorem: " + name);
}

BoundKind bound_kind(TheoremId id) {
    switch (id) {
        case TheoremId::chromatic_upper:
        case TheoremId::clique_upper:
        case TheoremId::cutedge_upper:
        case TheoremId::conn_star_upper:
        case TheoremId::edgeconn_star_upper:
            return BoundKind::upper;
        default:
            return BoundKind::lower;
    }
}

GammaRange gamma_range(TheoremId id) {
    switch (id) {
        case TheoremId::chromatic_lower:
        case TheoremId::cutedge_upper:
        case TheoremId::conn_star_upper:
        case TheoremId::edgeconn_star_upper:
            return GammaRange::negative;
        case TheoremId::chromatic_upper:
        case TheoremId::clique_lower:
        case TheoremId::clique_upper:
            return GammaRange::at_most_minus_one;
        default:
            return GammaRange::unit_negative;
    }
}

bool gamma_admissible(TheoremId id, double gamma) {
    switch (gamma_range(id)) {
        case GammaRange::negative: return gamma < 0;
        case GammaRange::at_most_minus_one: return gamma <= -1;
        case GammaRange::unit_negative: return gamma >= -1 && gamma < 0;
    }
    return false;
}

std::string gamma_range_text(GammaRange range) {
    switch (range) {
        case GammaRange::negative: return "gamma < 0";
        case GammaRange::at_most_minus_one: return "gamma <= -1";
        case GammaRange::unit_negative: return "-1 <= gamma < 0";
    }
    return {};
}

std::pair<int, int> c_range(TheoremId id, int n) {
    switch (id) {
        case TheoremId::chromatic_lower:
        case TheoremId::chromatic_upper:
        case TheoremId::clique_lower:
        case TheoremId::clique_upper:
            return {2, n - 1};
        case TheoremId::cutedge_upper:
            return {1, n - 3};
        default:
            return {1, n - 1};
    }
}

namespace {

void check_query(const BoundQuery& q) {
    if (q.n < 2) throw std::invalid_argument("bound query needs n >= 2");
    GammaExponent gamma(q.gamma);  // rejects 0
    if (q.exploratory) {
        if (q.c < 1 || q.c > q.n - 1) {
            throw std::invalid_argument("bound query needs 1 <= c <= n-1");
        }
        return;
    }
    if (!gamma_admissible(q.theorem, q.gamma)) {
        throw std::invalid_argument(theorem_name(q.theorem) + " requires " +
                                    gamma_range_text(gamma_range(q.theorem)) + ", got " +
                                    std::to_string(q.gamma));
    }
    auto [lo, hi] = c_range(q.theorem, q.n);
    if (q.c < lo || q.c > hi) {
        throw std::invalid_argument(theorem_name(q.theorem) + " requires " +
                                    std::to_string(lo) + " <= c <= " + std::to_string(hi) +
                                    " at n = " + std::to_string(q.n) + ", got c = " +
                                    std::to_string(q.c));
    }
}

double turan_bound(int n, int c, double gamma) {
    int q = n / c;
    int r = n - c * q;
    double value = static_cast<double>(c - r) * q * degree_power(n - q, gamma);
    if (r > 0) value += static_cast<double>(r) * (q + 1) * degree_power(n - q - 1, gamma);
    return value;
}

double pineapple_bound(int n, int c, double gamma) {
    return (n - c) + degree_power(n - 1, gamma) +
           (c - 1) * degree_power(c - 1, gamma);
}

double cutedge_bound(int n, int c, double gamma) {
    return c + (n - c - 1) * degree_power(2, gamma) + degree_power(c + 2, gamma);
}

double connectivity_bound(int n, int c, double gamma) {
    double value = c * degree_power(n - 1, gamma) + degree_power(c, gamma);
    if (n - c - 1 > 0) value += (n - c - 1) * degree_power(n - 2, gamma);
    return value;
}

double star_bound(int n, double gamma) {
    return (n - 1) + degree_power(n - 1, gamma);
}

}  // namespace

double bound_value(const BoundQuery& q) {
    check_query(q);
    switch (q.theorem) {
        case TheoremId::chromatic_lower:
        case TheoremId::clique_lower:
            return turan_bound(q.n, q.c, q.gamma);
        case TheoremId::chromatic_upper:
        case TheoremId::clique_upper:
            return pineapple_bound(q.n, q.c, q.gamma);
        case TheoremId::cutedge_upper:
            return cutedge_bound(q.n, q.c, q.gamma);
        case TheoremId::connectivity_lower:
        case TheoremId::connectivity_atmost_lower:
        case TheoremId::edge_connectivity_lower:
        case TheoremId::edge_connectivity_atmost_lower:
        case TheoremId::min_degree_lower:
            return connectivity_bound(q.n, q.c, q.gamma);
        case TheoremId::conn_star_upper:
        case TheoremId::edgeconn_star_upper:
            return star_bound(q.n, q.gamma);
    }
    throw std::logic_error("unknown theorem id");
}

ExtremalCharacterization extremal_witnesses(const BoundQuery& q) {
    check_query(q);
    ExtremalCharacterization out;
    switch (q.theorem) {
        case TheoremId::chromatic_lower:
        case TheoremId::clique_lower:
            out.specs.push_back(FamilySpec::turan(q.n, q.c));
            break;
        case TheoremId::chromatic_upper:
        case TheoremId::clique_upper:
            if (q.c >= 2) out.specs.push_back(FamilySpec::pineapple(q.n, q.c));
            break;
        case TheoremId::cutedge_upper:
            // exploratory probes can push c past n-3 where no witness family exists
            if (q.n - q.c >= 3) {
                out.specs.push_back(FamilySpec::pendant_cycle(q.n, q.c));
            }
            break;
        case TheoremId::connectivity_lower:
        case TheoremId::connectivity_atmost_lower:
            if (q.c == q.n - 1) {
                out.specs.push_back(FamilySpec::complete(q.n));  // K_n is the whole class
            } else if (q.c == 1 && q.gamma == -1.0) {
                // every split of n-1 attains the bound at gamma = -1
                for (int n1 = 1; n1 <= (q.n - 1) / 2; ++n1) {
                    out.specs.push_back(FamilySpec::connectivity_split(q.n, 1, n1));
                }
            } else {
                out.specs.push_back(FamilySpec::connectivity_split(q.n, q.c, 1));
            }
            break;
        case TheoremId::edge_connectivity_lower:
        case TheoremId::edge_connectivity_atmost_lower:
        case TheoremId::min_degree_lower:
            // unique even at c = 1, gamma = -1: the wider splits leave the class
            if (q.c == q.n - 1) {
                out.specs.push_back(FamilySpec::complete(q.n));
            } else {
                out.specs.push_back(FamilySpec::connectivity_split(q.n, q.c, 1));
            }
            break;
        case TheoremId::conn_star_upper:
        case TheoremId::edgeconn_star_upper:
            out.specs.push_back(FamilySpec::star(q.n));
            break;
    }
    return out;
}

double psi(double x, int n, GammaExponent gamma) {
    if (!gamma.negative()) throw std::invalid_argument("psi requires gamma < 0");
    if (x < 2.0) throw std::invalid_argument("psi requires x >= 2");
    if (x > n) throw std::invalid_argument("psi requires x <= n");
    double g = gamma.value();
    return (n - x) * std::pow(x, g) - (n - x + 1) * std::pow(x - 1, g);
}

double lemma_f(double x, int n, int c, GammaExponent gamma) {
    if (n < 3) throw std::invalid_argument("lemma_f requires n >= 3");
    if (c < 1 || c > n - 2) throw std::invalid_argument("lemma_f requires 1 <= c <= n-2");
    if (gamma.value() < -1.0 || gamma.value() >= 0.0) {
        throw std::invalid_argument("lemma_f requires -1 <= gamma < 0");
    }
    if (x < 1.0 || x > n - c - 1) {
        throw std::invalid_argument("lemma_f requires 1 <= x <= n-c-1");
    }
    double g = gamma.value();
    // m * b^g, folded to b^(g+1) when m == b so the c = 1, gamma = -1
    // case lands on 2 exactly
    auto term = [g](double m, double b) {
        return m == b ? std::pow(b, g + 1.0) : m * std::pow(b, g);
    };
    return term(x, x + c - 1) + term(n - c - x, n - 1 - x);
}

ChainCheckResult chain_inequality_check(int n, int c_max, GammaExponent gamma) {
    if (!gamma.negative()) {
        throw std::invalid_argument("chain check requires gamma < 0");
    }
    if (c_max < 2 || c_max > n - 2) {
        throw std::invalid_argument("chain check requires 2 <= c_max <= n-2");
    }
    ChainCheckResult result;
    result.strictly_decreasing = true;
    for (int i = 2; i <= c_max; ++i) {
        double lo = predicted_index(FamilySpec::connectivity_split(n, i, 1), gamma);
        double hi = predicted_index(FamilySpec::connectivity_split(n, i - 1, 1), gamma);
        result.margins.push_back(hi - lo);
        if (!(hi - lo > 0)) result.strictly_decreasing = false;
    }
    return result;
}

}  // namespace randic
