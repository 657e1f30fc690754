// Independent brute-force oracles for the test and acceptance suites.
// Everything here recomputes results from definitions (all labelings,
// all subsets, all assignments) and deliberately shares no search code
// with the library implementations it checks.
#ifndef RANDIC_TESTS_ORACLES_HPP
#define RANDIC_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "randic/graph.hpp"

namespace randic::oracle {

// Number of isomorphism classes of connected graphs on n vertices,
// counted as the labeled graphs that are the lexicographic minimum of
// their own relabeling orbit (all n! permutations, no canonical-form
// machinery). n <= 7.
std::size_t connected_class_count(int n);

int chromatic_number(const Graph& g);           // all k-assignments
int clique_number(const Graph& g);              // all vertex subsets
int vertex_connectivity(const Graph& g);        // all vertex cuts
int edge_connectivity(const Graph& g);          // all edge cuts
std::vector<Edge> bridges(const Graph& g);      // per-edge deletion test

bool isomorphic(const Graph& a, const Graph& b);  // all permutations

// Helpers shared by the property suites.
Graph graph_from_mask(int n, std::uint64_t mask);  // column-order triangle bits
std::vector<Graph> all_connected_graphs(int n);    // via the enumeration module
Graph random_connected_graph(std::mt19937& rng, int n, double p = 0.5);
std::vector<Vertex> random_permutation(std::mt19937& rng, int n);

}  // namespace randic::oracle

#endif  // RANDIC_TESTS_ORACLES_HPP
