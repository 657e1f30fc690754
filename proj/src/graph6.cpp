#include "randic/graph6.hpp"

#include <stdexcept>

namespace randic {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62) {
        throw std::invalid_argument("graph6 short form limited to order <= 62");
    }
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw std::invalid_argument("graph6: invalid character (outside chr 63..126)");
        }
    }
    if (text[0] == 126) {
        throw std::invalid_argument("graph6: long form (order > 62) not supported");
    }
    int n = text[0] - 63;
    if (n < 1) {
        throw std::invalid_argument("graph6: order must be at least 1");
    }
    int m = n * (n - 1) / 2;
    std::size_t want = 1 + (m + 5) / 6;
    if (text.size() != want) {
        throw std::invalid_argument("graph6: malformed length, expected " +
                                    std::to_string(want) + " bytes for order " +
                                    std::to_string(n));
    }
    std::array<std::uint64_t, 32> bits{};  // 62*61/2 = 1891 bits
    for (int t = 0; t < m; ++t) {
        int value = text[1 + t / 6] - 63;
        if (value >> (5 - t % 6) & 1) bits[t / 64] |= std::uint64_t{1} << (t % 64);
    }
    if (m % 6 != 0) {
        int pad = text.back() - 63;
        if (pad & ((1 << (6 - m % 6)) - 1)) {
            throw std::invalid_argument("graph6: nonzero trailing padding bits");
        }
    }
    return Graph::from_upper_bits(n, bits);
}

}  // namespace randic
