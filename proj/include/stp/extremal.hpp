#pragma once

#include "stp/graph.hpp"

namespace stp {

// Placement of i cross edges between the two cliques: links are pairs
// (a, b) with a indexing the left clique and b the right clique.
struct CrossPattern {
    int left_size = 0;
    int right_size = 0;
    std::vector<std::pair<int, int>> links;
};

struct FamilyGraph {
    Graph graph;
    int n = 0;
    int n1 = 0;
    CrossPattern pattern;
};

Graph complete_graph(int n);

// K_{n1} on vertices 0..n1-1, K_{n-n1} on n1..n-1, plus the pattern's
// cross edges.
FamilyGraph family_graph(int n, int n1, const CrossPattern& pattern);

// Two-clique graph whose i cross edges all leave the hub vertex 0 of
// K_{delta+1} and land on the first i vertices of the other clique.
Graph book_graph(int n, int delta, int i);

// Join of K_k with (K_k plus n-2k isolated vertices); k(n-1) edges.
Graph join_candidate(int n, int k);

// All two-clique graphs with i cross edges, one representative per orbit
// of cross patterns under part-preserving relabeling, in a deterministic
// canonical order. Exhaustive mode limits: n <= 64, i <= 4 (the orbit count
// depends only on i).
std::vector<FamilyGraph> enumerate_family(int n, int n1, int i);

}  // namespace stp
