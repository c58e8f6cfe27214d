#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "stp/graph.hpp"

namespace stp {

using bigint = boost::multiprecision::cpp_int;

struct TreeCount {
    bigint count;
};

// Exact number of spanning trees via a fraction-free (Bareiss) determinant
// of the Laplacian minor. Returns 0 for disconnected graphs, 1 for n = 1.
TreeCount spanning_tree_count(const Graph& g);

}  // namespace stp
