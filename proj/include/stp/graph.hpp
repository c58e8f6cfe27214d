#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stp {

// All input/contract violations surface as this exception type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph on vertices {0..n-1}. Immutable after
// construction; edges are stored lexicographically sorted with u < v,
// adjacency lists are sorted and derived from the edge list.
class Graph {
public:
    Graph() = default;

    // Builds a graph, collapsing duplicate pairs. Loops and out-of-range
    // endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    // Copy-and-modify helpers for local search.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
    int delta = 0;              // minimum degree
    int max_degree = 0;
    std::vector<int> sequence;  // sorted ascending
};

DegreeProfile degree_profile(const Graph& g);

// Partition of {0..n-1} into disjoint nonempty blocks. Blocks are kept
// sorted internally and ordered by their smallest element.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    int t() const { return static_cast<int>(blocks.size()); }
    int t1() const;              // number of singleton blocks
    int t2() const { return t() - t1(); }

    // Builds from a block-id array (block_of[v] = id); ids need not be dense.
    static VertexPartition from_block_ids(const std::vector<int>& block_of);
    // Validates against a graph's vertex set; throws on malformed input.
    void validate(int n) const;
};

struct CutWitness {
    std::vector<int> side;   // vertex set U, sorted
    int boundary_size = 0;   // |boundary(U)|
};

bool is_connected(const Graph& g);

// component_of[v] = index of v's connected component, numbered in order of
// smallest contained vertex. Returns the number of components.
int connected_components(const Graph& g, std::vector<int>& component_of);

// |boundary(U)|: edges with exactly one endpoint in U. U must be a nonempty
// proper subset of the vertex set.
int boundary_size(const Graph& g, const std::vector<int>& side);

// Number of edges whose endpoints lie in different parts of the partition.
int partition_cross_edges(const Graph& g, const VertexPartition& p);

// Edge-list text format: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace stp
