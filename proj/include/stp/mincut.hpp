#pragma once

#include "stp/graph.hpp"

namespace stp {

// Global minimum edge cut (Stoer-Wagner with unit weights). Requires
// n >= 2; returns 0 with one component as witness when g is disconnected.
// The witness side is normalized to the smaller side, ties going to the
// side containing vertex 0.
std::pair<int, CutWitness> edge_connectivity(const Graph& g);

}  // namespace stp
