#ifndef EXLAB_GRAPH6_HPP
#define EXLAB_GRAPH6_HPP

#include <string>
#include <string_view>

#include "exlab/graph.hpp"

namespace exlab {

// Standard graph6 text encoding: order header (short form for n <= 62,
// extended forms beyond), then the upper-triangle adjacency bits in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six per byte, each +63.
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects non-printable bytes, length mismatches and nonzero
// padding bits.
Graph decode_graph6(std::string_view s);

} // namespace exlab

#endif
