#include "randic/surgery.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "randic/families.hpp"

namespace randic {

namespace {

void require_negative(GammaExponent gamma, const char* op) {
    if (!gamma.negative()) {
        throw std::invalid_argument(std::string(op) + " requires gamma < 0");
    }
}

double degree_shift(int from, int to, double gamma) {
    return degree_power(to, gamma) - degree_power(from, gamma);
}

}  // namespace

SurgeryResult edge_delete_effect(const Graph& g, Vertex u, Vertex v, GammaExponent gamma) {
    require_negative(gamma, "edge_delete_effect");
    if (!g.has_edge(u, v)) {
        throw std::invalid_argument("edge_delete_effect: edge absent");
    }
    if (g.degree(u) < 2 || g.degree(v) < 2) {
        throw std::invalid_argument("edge_delete_effect: pendant endpoint");
    }
    double delta = degree_shift(g.degree(u), g.degree(u) - 1, gamma.value()) +
                   degree_shift(g.degree(v), g.degree(v) - 1, gamma.value());
    return {delete_edge(g, u, v), delta};
}

SurgeryResult edge_add_effect(const Graph& g, Vertex u, Vertex v, GammaExponent gamma) {
    require_negative(gamma, "edge_add_effect");
    if (u == v || g.has_edge(u, v)) {
        throw std::invalid_argument("edge_add_effect: edge exists or endpoints equal");
    }
    if (g.degree(u) == 0 || g.degree(v) == 0) {
        throw std::invalid_argument("edge_add_effect: isolated endpoint");
    }
    double delta = degree_shift(g.degree(u), g.degree(u) + 1, gamma.value()) +
                   degree_shift(g.degree(v), g.degree(v) + 1, gamma.value());
    return {add_edge(g, u, v), delta};
}

TransferSpec transfer_spec_full(const Graph& g, Vertex v, Vertex w) {
    std::uint64_t closed_v = g.neighbors(v) | (std::uint64_t{1} << v);
    std::uint64_t moved_set = g.neighbors(w) & ~closed_v;
    TransferSpec spec{v, w, {}};
    while (moved_set) {
        spec.moved.push_back(std::countr_zero(moved_set));
        moved_set &= moved_set - 1;
    }
    if (spec.moved.empty()) {
        throw std::invalid_argument("transfer: N(w) \\ N[v] is empty");
    }
    return spec;
}

SurgeryResult transfer(const Graph& g, const TransferSpec& spec, GammaExponent gamma) {
    require_negative(gamma, "transfer");
    Vertex v = spec.target;
    Vertex w = spec.source;
    if (v == w) throw std::invalid_argument("transfer: target equals source");
    if (spec.moved.empty()) throw std::invalid_argument("transfer: empty moved set");
    if (g.degree(v) < g.degree(w)) {
        throw std::invalid_argument("transfer: target degree below source degree");
    }
    int t = static_cast<int>(spec.moved.size());
    if (g.degree(w) <= t) {
        throw std::invalid_argument("transfer: source degree must exceed moved count");
    }
    std::uint64_t closed_v = g.neighbors(v) | (std::uint64_t{1} << v);
    std::uint64_t seen = 0;
    for (Vertex m : spec.moved) {
        if (!g.has_edge(w, m)) {
            throw std::invalid_argument("transfer: moved vertex not adjacent to source");
        }
        if (closed_v >> m & 1) {
            throw std::invalid_argument("transfer: moved vertex inside N[target]");
        }
        if (seen >> m & 1) throw std::invalid_argument("transfer: duplicate moved vertex");
        seen |= std::uint64_t{1} << m;
    }
    Graph result = g;
    for (Vertex m : spec.moved) result = delete_edge(result, w, m);
    for (Vertex m : spec.moved) result = add_edge(result, v, m);
    // moved vertices keep their degrees; only v and w change
    double gval = gamma.value();
    double delta = degree_power(g.degree(v) + t, gval) - degree_power(g.degree(v), gval) +
                   degree_power(g.degree(w) - t, gval) - degree_power(g.degree(w), gval);
    return {std::move(result), delta};
}

namespace {

// A = N(u), B = V \ A: keep G[A], join A to B, empty B.
Graph rejoin_at(const Graph& g, Vertex u) {
    std::uint64_t a = g.neighbors(u);
    std::vector<Edge> edges;
    for (auto [x, y] : g.edges()) {
        if ((a >> x & 1) && (a >> y & 1)) edges.emplace_back(x, y);  // keep G[A]
    }
    for (Vertex x = 0; x < g.order(); ++x) {
        if (!(a >> x & 1)) continue;
        for (Vertex y = 0; y < g.order(); ++y) {
            if (a >> y & 1) continue;
            edges.emplace_back(x, y);
        }
    }
    return Graph::build(g.order(), edges);
}

Vertex max_degree_in(const Graph& g, std::uint64_t mask) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!(mask >> v & 1)) continue;
        if (best < 0 || g.degree(v) > g.degree(best)) best = v;
    }
    return best;
}

}  // namespace

SurgeryResult rejoin_max_degree(const Graph& g, GammaExponent gamma) {
    if (g.order() < 2) throw std::invalid_argument("rejoin: order must be at least 2");
    if (!is_connected(g)) throw std::invalid_argument("rejoin: disconnected input");
    Graph result = rejoin_at(g, max_degree_in(g, g.vertex_mask()));
    double delta = zeroth_order_general_randic(result, gamma) -
                   zeroth_order_general_randic(g, gamma);
    return {std::move(result), delta};
}

RejoinChain rejoin_chain(const Graph& g, GammaExponent gamma) {
    if (g.order() < 2) throw std::invalid_argument("rejoin: order must be at least 2");
    if (!is_connected(g)) throw std::invalid_argument("rejoin: disconnected input");
    RejoinChain chain;
    chain.graphs.push_back(g);
    std::uint64_t core = g.vertex_mask();
    int cap = 10 * g.order();
    while (!is_complete_multipartite(chain.graphs.back())) {
        if (static_cast<int>(chain.deltas.size()) >= cap) {
            throw std::runtime_error("rejoin chain: step cap exceeded, no termination");
        }
        const Graph& current = chain.graphs.back();
        Vertex u = max_degree_in(current, core);
        Graph next = rejoin_at(current, u);
        chain.deltas.push_back(zeroth_order_general_randic(next, gamma) -
                               zeroth_order_general_randic(current, gamma));
        core &= current.neighbors(u);  // u itself drops out
        chain.graphs.push_back(std::move(next));
    }
    return chain;
}

std::vector<int> balance_step(std::vector<int> parts, std::size_t i, std::size_t j) {
    if (i >= parts.size() || j >= parts.size() || i == j) {
        throw std::invalid_argument("balance_step: bad part indices");
    }
    if (parts[j] - parts[i] < 2) {
        throw std::invalid_argument("balance_step: parts must differ by at least 2");
    }
    ++parts[i];
    --parts[j];
    return parts;
}

std::vector<std::vector<int>> balance_to_turan(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("balance: no parts");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<std::vector<int>> chain{parts};
    int cap = 10 * n;
    while (true) {
        auto lo = std::min_element(parts.begin(), parts.end()) - parts.begin();
        auto hi = std::max_element(parts.begin(), parts.end()) - parts.begin();
        if (parts[hi] - parts[lo] <= 1) break;
        if (static_cast<int>(chain.size()) > cap) {
            throw std::runtime_error("balance: step cap exceeded, no termination");
        }
        parts = balance_step(std::move(parts), lo, hi);
        chain.push_back(parts);
    }
    return chain;
}

}  // namespace randic
