#include "randic/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace randic {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_order(int n) {
    if (n < 1 || n > Graph::max_order) {
        throw std::invalid_argument("graph order must be between 1 and 64, got " +
                                    std::to_string(n));
    }
}

}  // namespace

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
    }
}

Graph Graph::build(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::out_of_range("edge endpoint out of range for order " +
                                    std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        adj[u] |= bit(v);  // duplicates collapse
        adj[v] |= bit(u);
    }
    return Graph(n, std::move(adj));
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_upper_bits(int n, std::span<const std::uint64_t> bits) {
    check_order(n);
    std::vector<std::uint64_t> adj(n, 0);
    int t = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++t) {
            if (bits[t / 64] >> (t % 64) & 1) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    return Graph(n, std::move(adj));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::uint64_t Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = std::popcount(adj_[v]);
    return d;
}

std::vector<int> Graph::sorted_degrees() const {
    auto d = degrees();
    std::sort(d.begin(), d.end());
    return d;
}

int Graph::min_degree() const {
    auto d = degrees();
    return *std::min_element(d.begin(), d.end());
}

int Graph::max_degree() const {
    auto d = degrees();
    return *std::max_element(d.begin(), d.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[u] & ~((bit(u) << 1) - 1);
        while (rest) {
            Vertex v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
        throw std::invalid_argument("edge already present: " + std::to_string(u) + "-" +
                                    std::to_string(v));
    }
    auto adj = g.adj_;
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    return Graph(g.n_, std::move(adj));
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.has_edge(u, v)) {
        throw std::invalid_argument("edge absent: " + std::to_string(u) + "-" +
                                    std::to_string(v));
    }
    auto adj = g.adj_;
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
    return Graph(g.n_, std::move(adj));
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
    std::uint64_t drop = 0;
    for (Vertex v : s) {
        g.check_vertex(v);
        drop |= bit(v);
    }
    if (drop == g.vertex_mask()) {
        throw std::invalid_argument("cannot delete all vertices");
    }
    std::vector<Vertex> map(g.n_, -1);
    int m = 0;
    for (Vertex v = 0; v < g.n_; ++v) {
        if (!(drop >> v & 1)) map[v] = m++;
    }
    std::vector<std::uint64_t> adj(m, 0);
    for (Vertex v = 0; v < g.n_; ++v) {
        if (map[v] < 0) continue;
        std::uint64_t row = g.adj_[v] & ~drop;
        while (row) {
            Vertex w = std::countr_zero(row);
            row &= row - 1;
            adj[map[v]] |= bit(map[w]);
        }
    }
    return Graph(m, std::move(adj));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.n_ + b.n_;
    check_order(n);
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < a.n_; ++v) adj[v] = a.adj_[v];
    for (Vertex v = 0; v < b.n_; ++v) adj[a.n_ + v] = b.adj_[v] << a.n_;
    return Graph(n, std::move(adj));
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    std::uint64_t left = (std::uint64_t{1} << a.n_) - 1;
    std::uint64_t right = g.vertex_mask() & ~left;
    for (Vertex v = 0; v < a.n_; ++v) g.adj_[v] |= right;
    for (Vertex v = a.n_; v < g.n_; ++v) g.adj_[v] |= left;
    return g;
}

Graph complement(const Graph& g) {
    std::vector<std::uint64_t> adj(g.n_);
    for (Vertex v = 0; v < g.n_; ++v) {
        adj[v] = ~g.adj_[v] & g.vertex_mask() & ~bit(v);
    }
    return Graph(g.n_, std::move(adj));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.n_) {
        throw std::invalid_argument("permutation length does not match order");
    }
    std::uint64_t seen = 0;
    for (Vertex p : perm) {
        if (p < 0 || p >= g.n_ || (seen >> p & 1)) {
            throw std::invalid_argument("not a permutation of 0..n-1");
        }
        seen |= bit(p);
    }
    std::vector<std::uint64_t> adj(g.n_, 0);
    for (Vertex v = 0; v < g.n_; ++v) {
        std::uint64_t row = g.adj_[v];
        while (row) {
            Vertex w = std::countr_zero(row);
            row &= row - 1;
            adj[perm[v]] |= bit(perm[w]);
        }
    }
    return Graph(g.n_, std::move(adj));
}

bool is_connected(const Graph& g) {
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            Vertex v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == g.vertex_mask();
}

namespace {

// Search state for the minimal upper-triangle bit-string. Positions are
// filled left to right; position k contributes column k, the bits against
// the k vertices already placed. cells[k] is the degree required at
// position k (degrees ascending), which restricts candidates to the
// degree cell and keeps the form a class invariant.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> cell_degree;   // required degree per position
    std::vector<Vertex> placed;
    std::vector<std::uint8_t> cur;  // column-order bits of the partial string
    std::vector<std::uint8_t> best;
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph),
          n(graph.order()),
          cell_degree(graph.sorted_degrees()),
          cur(static_cast<std::size_t>(n) * (n - 1) / 2),
          best(cur.size()) {}

    void run() { descend(0, 0, false); }

    void descend(int k, std::uint64_t used, bool strictly_less) {
        if (k == n) {
            // A best found deeper in the tree can make an inherited
            // strictly_less flag stale, so re-compare before replacing.
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        int offset = k * (k - 1) / 2;
        std::uint64_t tried = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (g.degree(v) != cell_degree[k]) continue;
            // a twin of an already-tried candidate spans an identical
            // subtree: the transposition is an automorphism
            bool twin = false;
            std::uint64_t rest = tried;
            while (rest && !twin) {
                Vertex t = std::countr_zero(rest);
                rest &= rest - 1;
                twin = (g.neighbors(v) & ~(std::uint64_t{1} << t)) ==
                       (g.neighbors(t) & ~(std::uint64_t{1} << v));
            }
            tried |= std::uint64_t{1} << v;
            if (twin) continue;
            std::uint64_t row = g.neighbors(v);
            bool less = strictly_less;
            bool worse = false;
            for (int i = 0; i < k; ++i) {
                std::uint8_t b = (row >> placed[i]) & 1;
                cur[offset + i] = b;
                if (!less && have_best) {
                    if (b > best[offset + i]) {
                        worse = true;
                        break;
                    }
                    if (b < best[offset + i]) less = true;
                }
            }
            if (worse) continue;
            placed.push_back(v);
            descend(k + 1, used | (std::uint64_t{1} << v), less);
            placed.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > 12) {
        throw std::invalid_argument("canonical form limited to order <= 12, got " +
                                    std::to_string(g.order()));
    }
    CanonicalSearch search(g);
    search.run();
    CanonicalForm form;
    form.n = g.order();
    for (std::size_t t = 0; t < search.best.size(); ++t) {
        if (search.best[t]) form.words[t / 64] |= std::uint64_t{1} << (63 - t % 64);
    }
    return form;
}

Graph canonical_graph(const CanonicalForm& form) {
    check_order(form.n);
    std::array<std::uint64_t, 2> lsb{};  // re-pack for from_upper_bits
    int m = form.n * (form.n - 1) / 2;
    for (int t = 0; t < m; ++t) {
        if (form.words[t / 64] >> (63 - t % 64) & 1) {
            lsb[t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }
    return Graph::from_upper_bits(form.n, lsb);
}

}  // namespace randic
