#ifndef RANDIC_INVARIANTS_HPP
#define RANDIC_INVARIANTS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

/// Nonzero real exponent of the degree-power sum.
class GammaExponent {
public:
    explicit GammaExponent(double value) : value_(value) {
        if (value == 0.0 || !std::isfinite(value)) {
            throw std::invalid_argument("gamma must be a non-zero real number");
        }
    }
    double value() const { return value_; }
    bool negative() const { return value_ < 0; }

private:
    double value_;
};

// d^gamma for integer degrees; d = 1 short-circuits to 1 exactly so pendant
// terms never pick up platform pow noise. Every index and bound evaluation
// in the library funnels through here.
inline double degree_power(int d, double gamma) {
    if (d < 1) throw std::domain_error("degree power undefined for degree " + std::to_string(d));
    if (d == 1) return 1.0;
    return std::exp(gamma * std::log(static_cast<double>(d)));
}

// Relative comparison at scale max(1, |value|); the project-wide default
// tolerance is 1e-9.
inline constexpr double default_tolerance = 1e-9;
inline bool nearly_equal(double a, double b, double tol = default_tolerance) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Sum of d(u)^gamma over all vertices. Isolated vertices are an error.
double zeroth_order_general_randic(const Graph& g, GammaExponent gamma);
double zeroth_order_general_randic(std::span<const int> degrees, GammaExponent gamma);
// The gamma = -1 case, evaluated through the same path bit for bit.
double inverse_degree(const Graph& g);

int chromatic_number(const Graph& g);   // exact, backtracking
int clique_number(const Graph& g);      // exact, bitset branch and bound
// Flow-based; both require a connected graph of order >= 2.
int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);
std::vector<Edge> cut_edges(const Graph& g);  // bridges, one DFS

struct InvariantProfile {
    int n = 0;
    int chromatic = 0;
    int clique = 0;
    int vertex_conn = 0;
    int edge_conn = 0;
    int cut_edge_count = 0;
    int min_deg = 0;
    int max_deg = 0;
};

// Every parameter the theorems are stated in, in one pass.
InvariantProfile invariant_profile(const Graph& g);

}  // namespace randic

#endif  // RANDIC_INVARIANTS_HPP
