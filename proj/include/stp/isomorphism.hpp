#pragma once

#include "stp/graph.hpp"

namespace stp {

// Exact isomorphism test at desk scale: degree-sequence and spectrum
// prefilters, then backtracking over degree-compatible assignments.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace stp
