#ifndef RANDIC_GRAPH6_HPP
#define RANDIC_GRAPH6_HPP

#include <string>
#include <string_view>

#include "randic/graph.hpp"

namespace randic {

// graph6 short form, bit-exact: byte chr(n+63), then the upper-triangle
// adjacency bits in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian into 6-bit groups, each group +63, zero-padded. n <= 62.
std::string graph6_encode(const Graph& g);

// Rejects long form, characters outside chr(63..126), wrong length and
// nonzero padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace randic

#endif  // RANDIC_GRAPH6_HPP
