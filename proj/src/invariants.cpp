#include "randic/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace randic {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) {
        throw std::invalid_argument(std::string(op) + ": disconnected input");
    }
}

}  // namespace

double zeroth_order_general_randic(const Graph& g, GammaExponent gamma) {
    double sum = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 0) {
            throw std::invalid_argument("index undefined: isolated vertex " +
                                        std::to_string(v));
        }
        sum += degree_power(d, gamma.value());
    }
    return sum;
}

double zeroth_order_general_randic(std::span<const int> degrees, GammaExponent gamma) {
    double sum = 0.0;
    for (int d : degrees) {
        if (d == 0) throw std::invalid_argument("index undefined: isolated vertex");
        sum += degree_power(d, gamma.value());
    }
    return sum;
}

double inverse_degree(const Graph& g) {
    return zeroth_order_general_randic(g, GammaExponent(-1.0));
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            Vertex v = std::countr_zero(cand);
            cand &= cand - 1;
            expand(cand & g.neighbors(v), size + 1);
        }
        best = std::max(best, size);
    }
};

}  // namespace

int clique_number(const Graph& g) {
    CliqueSearch search{g};
    search.expand(g.vertex_mask(), 0);
    return search.best;
}

namespace {

struct ColoringSearch {
    const Graph& g;
    std::vector<Vertex> order;  // degree descending
    int k;

    bool assign(std::size_t idx, std::span<std::uint64_t> color_sets, int used) {
        if (idx == order.size()) return true;
        Vertex v = order[idx];
        std::uint64_t nb = g.neighbors(v);
        // a fresh color index only ever introduces the next unused one
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (color_sets[c] & nb) continue;
            color_sets[c] |= bit(v);
            if (assign(idx + 1, color_sets, std::max(used, c + 1))) return true;
            color_sets[c] &= ~bit(v);
        }
        return false;
    }
};

bool colorable(const Graph& g, int k) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint64_t> color_sets(k, 0);
    ColoringSearch search{g, std::move(order), k};
    return search.assign(0, color_sets, 0);
}

int greedy_coloring_bound(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint64_t> color_sets;
    for (Vertex v : order) {
        std::uint64_t nb = g.neighbors(v);
        bool placed = false;
        for (auto& set : color_sets) {
            if (!(set & nb)) {
                set |= bit(v);
                placed = true;
                break;
            }
        }
        if (!placed) color_sets.push_back(bit(v));
    }
    return static_cast<int>(color_sets.size());
}

}  // namespace

int chromatic_number(const Graph& g) {
    int lower = clique_number(g);
    int upper = greedy_coloring_bound(g);
    for (int k = lower; k < upper; ++k) {
        if (colorable(g, k)) return k;
    }
    return upper;
}

namespace {

// Edmonds-Karp on a dense capacity matrix; plenty for order <= 64 with
// vertex splitting (<= 128 nodes).
struct MaxFlow {
    int n;
    std::vector<int> cap;  // n*n

    explicit MaxFlow(int nodes) : n(nodes), cap(nodes * nodes, 0) {}
    int& at(int u, int v) { return cap[u * n + v]; }

    int run(int s, int t) {
        int flow = 0;
        std::vector<int> parent(n);
        while (true) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            std::vector<int> queue{s};
            for (std::size_t head = 0; head < queue.size() && parent[t] < 0; ++head) {
                int u = queue[head];
                for (int v = 0; v < n; ++v) {
                    if (parent[v] < 0 && at(u, v) > 0) {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if (parent[t] < 0) return flow;
            int push = std::numeric_limits<int>::max();
            for (int v = t; v != s; v = parent[v]) push = std::min(push, at(parent[v], v));
            for (int v = t; v != s; v = parent[v]) {
                at(parent[v], v) -= push;
                at(v, parent[v]) += push;
            }
            flow += push;
        }
    }
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("vertex connectivity needs order >= 2");
    require_connected(g, "vertex_connectivity");
    int n = g.order();
    // complete graphs have no cut at all; n-1 by convention
    bool complete = true;
    for (Vertex v = 0; v < n && complete; ++v) {
        complete = g.degree(v) == n - 1;
    }
    if (complete) return n - 1;

    int best = n - 1;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            MaxFlow flow(2 * n);  // v_in = 2v, v_out = 2v+1
            for (Vertex v = 0; v < n; ++v) flow.at(2 * v, 2 * v + 1) = 1;
            for (auto [u, v] : g.edges()) {
                flow.at(2 * u + 1, 2 * v) = n;
                flow.at(2 * v + 1, 2 * u) = n;
            }
            best = std::min(best, flow.run(2 * s + 1, 2 * t));
        }
    }
    return best;
}

int edge_connectivity(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("edge connectivity needs order >= 2");
    require_connected(g, "edge_connectivity");
    int n = g.order();
    int best = n - 1;
    for (Vertex t = 1; t < n; ++t) {
        MaxFlow flow(n);
        for (auto [u, v] : g.edges()) {
            flow.at(u, v) = 1;
            flow.at(v, u) = 1;
        }
        best = std::min(best, flow.run(0, t));
    }
    return best;
}

namespace {

struct BridgeSearch {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> bridges;
    int timer = 0;

    void dfs(Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        std::uint64_t row = g.neighbors(v);
        while (row) {
            Vertex w = std::countr_zero(row);
            row &= row - 1;
            if (disc[w] < 0) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridges.emplace_back(std::min(v, w), std::max(v, w));
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

std::vector<Edge> cut_edges(const Graph& g) {
    require_connected(g, "cut_edges");
    BridgeSearch search{g, std::vector<int>(g.order(), -1), std::vector<int>(g.order(), 0), {}};
    search.dfs(0, -1);
    std::sort(search.bridges.begin(), search.bridges.end());
    return search.bridges;
}

InvariantProfile invariant_profile(const Graph& g) {
    InvariantProfile p;
    p.n = g.order();
    p.chromatic = chromatic_number(g);
    p.clique = clique_number(g);
    if (g.order() == 1) {
        p.vertex_conn = 0;  // K_1, n-1 by the complete-graph convention
        p.edge_conn = 0;
    } else {
        p.vertex_conn = vertex_connectivity(g);
        p.edge_conn = edge_connectivity(g);
    }
    p.cut_edge_count = static_cast<int>(cut_edges(g).size());
    p.min_deg = g.min_degree();
    p.max_deg = g.max_degree();
    return p;
}

}  // namespace randic
