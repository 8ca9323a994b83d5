#pragma once

#include <string>
#include <string_view>

#include "wt/graph.hpp"

namespace wt {

/// "n=<int>;edges=<u>-<v>[,<u>-<v>...]" with 0-based vertices, e.g. "n=4;edges=0-1,1-2,2-3".
/// Duplicate edges are tolerated; loops and out-of-range endpoints throw ParseError.
SimpleGraph parse_edge_list(std::string_view text);

/// Edges sorted with u < v, so equal graphs print identically.
std::string format_edge_list(const SimpleGraph& g);

/// Standard graph6: size header then the upper triangle in column order, six bits per
/// printable byte (offset 63).
std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

}  // namespace wt
