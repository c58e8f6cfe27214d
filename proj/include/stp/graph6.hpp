#pragma once

#include <string>

#include "stp/graph.hpp"

namespace stp {

// graph6 interchange format (printable 6-bit encoding of the upper
// triangle, column by column). Short form covers n <= 62; the '~'-prefixed
// 4-byte header covers n <= 258047. Nonzero padding bits are rejected, and
// parse errors name the offending byte offset.
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

}  // namespace stp
