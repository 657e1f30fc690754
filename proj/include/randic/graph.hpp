#ifndef RANDIC_GRAPH_HPP
#define RANDIC_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace randic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
/// Adjacency rows are single machine words; all edit operations return
/// a new value and leave the input untouched, so graphs are safe to
/// share between threads.
class Graph {
public:
    static constexpr int max_order = 64;

    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges);
    // Adjacency given as upper-triangle bits in column order
    // (0,1),(0,2),(1,2),(0,3),...; bit t of `bits[t/64]` (LSB first).
    static Graph from_upper_bits(int n, std::span<const std::uint64_t> bits);

    int order() const { return n_; }
    std::size_t edge_count() const;
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::uint64_t neighbors(Vertex v) const;           // as a bit row
    std::uint64_t vertex_mask() const;                 // all n bits set
    std::vector<int> degrees() const;                  // by label
    std::vector<int> sorted_degrees() const;           // ascending
    int min_degree() const;
    int max_degree() const;
    std::vector<Edge> edges() const;                   // (u,v) with u < v

    bool operator==(const Graph&) const = default;     // label equality

private:
    Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    friend Graph add_edge(const Graph&, Vertex, Vertex);
    friend Graph delete_edge(const Graph&, Vertex, Vertex);
    friend Graph delete_vertices(const Graph&, std::span<const Vertex>);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph join(const Graph&, const Graph&);
    friend Graph complement(const Graph&);
    friend Graph relabel(const Graph&, std::span<const Vertex>);
};

// Edit operations. Preconditions are enforced and violations reported
// with distinct messages (edge present/absent, vertex out of range, ...).
Graph add_edge(const Graph& g, Vertex u, Vertex v);       // u != v, uv absent
Graph delete_edge(const Graph& g, Vertex u, Vertex v);    // uv present
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);  // s a proper subset
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);               // union plus all cross edges
Graph complement(const Graph& g);
// perm maps old label -> new label; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

/// Relabeling-invariant representative of the isomorphism class: the
/// lexicographically minimal upper-triangle adjacency bit-string over all
/// degree-respecting relabelings. Equal forms certify isomorphism.
struct CanonicalForm {
    int n = 0;
    // Bit t of the column-order upper triangle sits at words[t/64],
    // bit position 63 - t%64, so array comparison is bit-string order.
    std::array<std::uint64_t, 2> words{};

    auto operator<=>(const CanonicalForm&) const = default;
};

// n <= 12 enforced; the search runs over ordered degree-partition cells
// with prefix pruning against the best string found so far.
CanonicalForm canonical_form(const Graph& g);
// Rebuild the representative graph (canonical labeling) from a form.
Graph canonical_graph(const CanonicalForm& form);

}  // namespace randic

template <>
struct std::hash<randic::CanonicalForm> {
    std::size_t operator()(const randic::CanonicalForm& f) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(f.n) * 0x9e3779b97f4a7c15ull;
        for (auto w : f.words) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

#endif  // RANDIC_GRAPH_HPP
