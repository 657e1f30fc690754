#include "randic/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace randic {

namespace {

[[noreturn]] void reject(const std::string& what) {
    throw std::invalid_argument("family spec: " + what);
}

void require(bool ok, const std::string& what) {
    if (!ok) reject(what);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::star: return "star";
        case Family::multipartite: return "multipartite";
        case Family::turan: return "turan";
        case Family::pineapple: return "pineapple";
        case Family::star_clique: return "star_clique";
        case Family::pendant_cycle: return "pendant_cycle";
        case Family::kite: return "kite";
        case Family::connectivity_split: return "connectivity_split";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Family::connectivity_split); ++i) {
        auto f = static_cast<Family>(i);
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family name: " + name);
}

FamilySpec FamilySpec::complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    return {Family::complete, n, n, {}, {}, 0};
}

FamilySpec FamilySpec::cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    return {Family::cycle, n, 0, {}, {}, 0};
}

FamilySpec FamilySpec::path(int n) {
    require(n >= 1, "path needs n >= 1");
    return {Family::path, n, 0, {}, {}, 0};
}

FamilySpec FamilySpec::star(int n) {
    require(n >= 2, "star needs n >= 2");
    return {Family::star, n, 0, {}, {}, 0};
}

FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
    require(!parts.empty(), "multipartite needs at least one part");
    require(std::is_sorted(parts.rbegin(), parts.rend()), "part sizes must be descending");
    require(parts.back() >= 1, "part sizes must be positive");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    require(n <= Graph::max_order, "order exceeds 64");
    int c = static_cast<int>(parts.size());
    return {Family::multipartite, n, c, std::move(parts), {}, 0};
}

FamilySpec FamilySpec::turan(int n, int c) {
    require(n >= 1 && c >= 1 && c <= n, "turan needs 1 <= c <= n");
    return {Family::turan, n, c, turan_parts(n, c), {}, 0};
}

FamilySpec FamilySpec::pineapple(int n, int c) {
    require(c >= 2 && c <= n, "pineapple needs 2 <= c <= n");
    return {Family::pineapple, n, c, {}, {}, 0};
}

FamilySpec FamilySpec::star_clique(int n, std::vector<int> pendants) {
    int c = static_cast<int>(pendants.size());
    require(c >= 1, "star_clique needs at least one clique vertex");
    int total = 0;
    for (int m : pendants) {
        require(m >= 0, "pendant counts must be nonnegative");
        total += m;
    }
    require(total == n - c, "pendant counts must sum to n - c");
    return {Family::star_clique, n, c, {}, std::move(pendants), 0};
}

FamilySpec FamilySpec::pendant_cycle(int n, int c) {
    require(c >= 1, "pendant_cycle needs c >= 1");
    require(n - c >= 3, "pendant_cycle needs a cycle of length >= 3");
    return {Family::pendant_cycle, n, c, {}, {}, 0};
}

FamilySpec FamilySpec::kite(int n, int c) {
    require(c >= 2 && c <= n, "kite needs 2 <= c <= n");
    return {Family::kite, n, c, {}, {}, 0};
}

FamilySpec FamilySpec::connectivity_split(int n, int c, int n1) {
    require(c >= 1, "connectivity_split needs c >= 1");
    int n2 = n - c - n1;
    require(n1 >= 1 && n2 >= 1, "connectivity_split needs n1, n2 >= 1 with n1 + n2 = n - c");
    FamilySpec spec{Family::connectivity_split, n, c, {}, {}, n1};
    return spec;
}

std::string FamilySpec::describe() const {
    std::ostringstream out;
    out << family_name(family) << "(n=" << n;
    switch (family) {
        case Family::multipartite: {
            out << ", parts=";
            for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
            break;
        }
        case Family::star_clique: {
            out << ", pendants=";
            for (std::size_t i = 0; i < pendants.size(); ++i)
                out << (i ? "," : "") << pendants[i];
            break;
        }
        case Family::connectivity_split:
            out << ", c=" << c << ", n1=" << split_n1;
            break;
        case Family::turan:
        case Family::pineapple:
        case Family::pendant_cycle:
        case Family::kite:
            out << ", c=" << c;
            break;
        default:
            break;
    }
    out << ")";
    return out.str();
}

bool is_complete_multipartite(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            // u and v share a part, so their neighborhoods must agree
            if ((g.neighbors(u) & ~(std::uint64_t{1} << v)) !=
                (g.neighbors(v) & ~(std::uint64_t{1} << u))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> turan_parts(int n, int c) {
    if (c < 1 || c > n) throw std::invalid_argument("turan parts need 1 <= c <= n");
    int q = n / c;
    int r = n - c * q;
    std::vector<int> parts;
    parts.insert(parts.end(), r, q + 1);
    parts.insert(parts.end(), c - r, q);
    return parts;
}

namespace {

Graph complete_multipartite(int n, std::span<const int> parts) {
    std::vector<Edge> edges;
    int start_i = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int start_j = start_i + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = start_i; u < start_i + parts[i]; ++u) {
                for (int v = start_j; v < start_j + parts[j]; ++v) {
                    edges.emplace_back(u, v);
                }
            }
            start_j += parts[j];
        }
        start_i += parts[i];
    }
    return Graph::build(n, edges);
}

Graph clique_with_pendants(int n, std::span<const int> pendants) {
    int c = static_cast<int>(pendants.size());
    std::vector<Edge> edges;
    for (int u = 0; u < c; ++u) {
        for (int v = u + 1; v < c; ++v) edges.emplace_back(u, v);
    }
    int next = c;
    for (int i = 0; i < c; ++i) {
        for (int m = 0; m < pendants[i]; ++m) edges.emplace_back(i, next++);
    }
    return Graph::build(n, edges);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    int n = spec.n;
    switch (spec.family) {
        case Family::complete: {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            }
            return Graph::build(n, edges);
        }
        case Family::cycle: {
            std::vector<Edge> edges;
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            return Graph::build(n, edges);
        }
        case Family::path: {
            std::vector<Edge> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph::build(n, edges);
        }
        case Family::star: {
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            return Graph::build(n, edges);
        }
        case Family::multipartite:
        case Family::turan:
            return complete_multipartite(n, spec.parts);
        case Family::pineapple: {
            std::vector<int> pendants(spec.c, 0);
            pendants[0] = n - spec.c;
            return clique_with_pendants(n, pendants);
        }
        case Family::star_clique:
            return clique_with_pendants(n, spec.pendants);
        case Family::pendant_cycle: {
            int ring = n - spec.c;
            std::vector<Edge> edges;
            for (int v = 0; v < ring; ++v) edges.emplace_back(v, (v + 1) % ring);
            for (int p = ring; p < n; ++p) edges.emplace_back(0, p);
            return Graph::build(n, edges);
        }
        case Family::kite: {
            std::vector<Edge> edges;
            for (int u = 0; u < spec.c; ++u) {
                for (int v = u + 1; v < spec.c; ++v) edges.emplace_back(u, v);
            }
            // path hangs off clique vertex 0
            int prev = 0;
            for (int v = spec.c; v < n; ++v) {
                edges.emplace_back(prev, v);
                prev = v;
            }
            return Graph::build(n, edges);
        }
        case Family::connectivity_split: {
            int c = spec.c;
            int n1 = spec.split_n1;
            std::vector<Edge> edges;
            for (int u = 0; u < c; ++u) {
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            }
            for (int u = c; u < c + n1; ++u) {
                for (int v = u + 1; v < c + n1; ++v) edges.emplace_back(u, v);
            }
            for (int u = c + n1; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            }
            return Graph::build(n, edges);
        }
    }
    throw std::logic_error("unknown family");
}

std::vector<std::pair<int, int>> degree_profile(const FamilySpec& spec) {
    int n = spec.n;
    std::vector<std::pair<int, int>> profile;
    auto add = [&](int degree, int count) {
        if (count > 0) profile.emplace_back(degree, count);
    };
    switch (spec.family) {
        case Family::complete:
            add(n - 1, n);
            break;
        case Family::cycle:
            add(2, n);
            break;
        case Family::path:
            if (n == 1) {
                add(0, 1);
            } else {
                add(1, 2);
                add(2, n - 2);
            }
            break;
        case Family::star:
            add(n - 1, 1);
            add(1, n - 1);
            break;
        case Family::multipartite:
        case Family::turan:
            for (int part : spec.parts) add(n - part, part);
            break;
        case Family::pineapple:
            add(n - 1, 1);
            add(spec.c - 1, spec.c - 1);
            add(1, n - spec.c);
            break;
        case Family::star_clique:
            for (int m : spec.pendants) add(spec.c - 1 + m, 1);
            add(1, n - spec.c);
            break;
        case Family::pendant_cycle:
            add(spec.c + 2, 1);
            add(2, n - spec.c - 1);
            add(1, spec.c);
            break;
        case Family::kite:
            if (n == spec.c) {
                add(n - 1, n);
            } else {
                add(spec.c, 1);
                add(spec.c - 1, spec.c - 1);
                add(2, n - spec.c - 1);
                add(1, 1);
            }
            break;
        case Family::connectivity_split: {
            int n1 = spec.split_n1;
            int n2 = n - spec.c - n1;
            add(n - 1, spec.c);
            add(n1 + spec.c - 1, n1);
            add(n2 + spec.c - 1, n2);
            break;
        }
    }
    return profile;
}

double predicted_index(const FamilySpec& spec, GammaExponent gamma) {
    double sum = 0.0;
    for (auto [degree, count] : degree_profile(spec)) {
        if (degree == 0) {
            throw std::invalid_argument("index undefined: family has isolated vertices");
        }
        sum += count * degree_power(degree, gamma.value());
    }
    return sum;
}

}  // namespace randic
