#include "randic/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "randic/graph6.hpp"

namespace randic {

namespace {

// Connectivity straight off an upper-triangle edge mask, no Graph value.
bool mask_connected(int n, std::uint32_t mask,
                    const std::vector<std::pair<int, int>>& pairs) {
    std::uint32_t adj[8] = {};
    std::uint32_t rest = mask;
    while (rest) {
        int t = std::countr_zero(rest);
        rest &= rest - 1;
        auto [i, j] = pairs[t];
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (n == 32 ? ~0u : (1u << n) - 1);
}

// All connected isomorphism classes on n <= 7 vertices as canonical
// forms. Sweeps every upper-triangle mask; whenever an unseen connected
// mask appears, its whole labeled orbit is marked so each class costs
// one canonical form plus n! relabelings instead of a canonical form
// per labeled graph.
std::vector<CanonicalForm> connected_classes(int n) {
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs(m);
    {
        int t = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) pairs[t++] = {i, j};
        }
    }
    // pair index under a relabeling, per permutation
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> pair_maps;
    do {
        std::vector<int> map(m);
        for (int t = 0; t < m; ++t) {
            auto [i, j] = pairs[t];
            int pi = perm[i], pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            map[t] = pj * (pj - 1) / 2 + pi;
        }
        pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(std::size_t{1} << m, false);
    std::vector<CanonicalForm> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (seen[mask]) continue;
        if (!mask_connected(n, mask, pairs)) continue;
        std::array<std::uint64_t, 2> bits{mask, 0};
        classes.push_back(canonical_form(Graph::from_upper_bits(n, bits)));
        for (const auto& map : pair_maps) {
            std::uint32_t image = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int t = std::countr_zero(rest);
                rest &= rest - 1;
                image |= 1u << map[t];
            }
            seen[image] = true;
        }
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

class BuiltinStream : public GraphStream {
public:
    explicit BuiltinStream(int n) : classes_(connected_classes(n)) {}

    std::optional<Graph> next() override {
        if (pos_ == classes_.size()) return std::nullopt;
        return canonical_graph(classes_[pos_++]);
    }

private:
    std::vector<CanonicalForm> classes_;
    std::size_t pos_ = 0;
};

class FileStream : public GraphStream {
public:
    explicit FileStream(const std::filesystem::path& path) : path_(path), in_(path) {
        if (!in_) {
            throw std::runtime_error("cannot open corpus file: " + path.string());
        }
    }

    std::optional<Graph> next() override {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                return graph6_decode(line);
            } catch (const std::exception& e) {
                throw std::runtime_error(path_.string() + ": line " +
                                         std::to_string(line_no_) + ": " + e.what());
            }
        }
        if (in_.bad()) {
            throw std::runtime_error(path_.string() + ": read failure");
        }
        return std::nullopt;
    }

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

}  // namespace

std::unique_ptr<GraphStream> enumerate_connected(int n) {
    if (n < 1 || n > 7) {
        throw std::invalid_argument("builtin enumeration supports 1 <= n <= 7, got " +
                                    std::to_string(n));
    }
    return std::make_unique<BuiltinStream>(n);
}

std::unique_ptr<GraphStream> ingest(const std::filesystem::path& path) {
    return std::make_unique<FileStream>(path);
}

std::unique_ptr<GraphStream> CorpusSource::open() const {
    return kind == Kind::builtin ? enumerate_connected(n) : ingest(path);
}

std::string CorpusSource::describe() const {
    return kind == Kind::builtin ? "builtin(n=" + std::to_string(n) + ")"
                                 : "file(" + path.string() + ")";
}

}  // namespace randic
