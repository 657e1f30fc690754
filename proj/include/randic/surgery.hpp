#ifndef RANDIC_SURGERY_HPP
#define RANDIC_SURGERY_HPP

#include <utility>
#include <vector>

#include "randic/graph.hpp"
#include "randic/invariants.hpp"

namespace randic {

struct SurgeryResult {
    Graph graph;
    double delta;  // index(result) - index(input)
};

// Deleting an edge between two vertices of degree >= 2 strictly raises
// the index for gamma < 0; adding an edge between non-isolated vertices
// strictly lowers it.
SurgeryResult edge_delete_effect(const Graph& g, Vertex u, Vertex v, GammaExponent gamma);
SurgeryResult edge_add_effect(const Graph& g, Vertex u, Vertex v, GammaExponent gamma);

/// Neighbor transfer: moved is a nonempty subset of N(w) \ N[v] of size
/// t with d(v) >= d(w) and d(w) > t. Validated eagerly and completely
/// before any edge is touched.
struct TransferSpec {
    Vertex target;                // v, keeps its edges and gains t
    Vertex source;                // w, loses the t edges
    std::vector<Vertex> moved;
};

// The full lemma set N(w) \ N[v]; throws when it is empty.
TransferSpec transfer_spec_full(const Graph& g, Vertex v, Vertex w);

// Applies the transfer; delta > 0 for gamma < 0.
SurgeryResult transfer(const Graph& g, const TransferSpec& spec, GammaExponent gamma);

// With u a maximum-degree vertex (ties broken by smallest label),
// A = N(u) and B = V \ A: keeps G[A], joins A to B completely and
// empties B. Every degree weakly grows, so delta <= 0 for gamma < 0.
SurgeryResult rejoin_max_degree(const Graph& g, GammaExponent gamma);

struct RejoinChain {
    std::vector<Graph> graphs;   // G_0 .. G_p, last one complete multipartite
    std::vector<double> deltas;  // per step, each <= 0 for gamma < 0
};

// Repeats the rejoin inside the shrinking neighborhood core (the pick
// of u moves to the core's maximum-degree vertex) until the graph is
// complete multipartite. The core loses at least one vertex per step;
// the 10*n cap flags a bug.
RejoinChain rejoin_chain(const Graph& g, GammaExponent gamma);

// Moves one unit from a larger part to a smaller one; requires a gap
// of at least 2.
std::vector<int> balance_step(std::vector<int> parts, std::size_t i, std::size_t j);

// Repeated balancing until all parts differ by at most 1 (the Turan
// profile). Returns every intermediate profile including the endpoints.
// Progress is strictly monotone; the 10*n step cap flags a bug.
std::vector<std::vector<int>> balance_to_turan(std::vector<int> parts);

}  // namespace randic

#endif  // RANDIC_SURGERY_HPP
