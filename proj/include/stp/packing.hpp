#pragma once

#include <functional>
#include <optional>

#include "stp/graph.hpp"

namespace stp {

using EdgeList = std::vector<std::pair<int, int>>;

struct PackingDecision {
    bool yes = false;
    std::vector<EdgeList> trees;          // k edge-disjoint spanning trees when yes
    std::optional<VertexPartition> witness;  // partition with e(pi) <= k(t-1)-1 when no
};

struct PackingCertificate {
    int tau = 0;
    std::vector<EdgeList> trees;
    std::optional<VertexPartition> violating_partition;  // for k = tau+1
};

struct PartitionOracleResult {
    bool yes = false;
    VertexPartition minimizing;  // partition attaining the minimum slack
    long long min_slack = 0;     // min over partitions of e(pi) - k(t-1)
};

struct DensityWitness {
    std::vector<int> vertex_set;
    long long edge_count = 0;  // edges of the induced subgraph
    int k = 0;                 // threshold it violates: edge_count > k*(|V|-1)
};

struct ForestCover {
    int arboricity = 0;
    std::vector<EdgeList> forests;           // partition E(G) exactly
    std::optional<DensityWitness> witness;   // for k = a-1, when a >= 2
};

// Decides tau(g) >= k by matroid-union augmentation over k graphic
// forests (Roskind-Tarjan style labeling). Edges are inserted in
// lexicographic order; a NO answer carries the violating partition read
// off the final label-propagation clumps.
PackingDecision has_k_trees(const Graph& g, int k);

// Exact spanning tree packing number with certificates. Disconnected
// graphs get tau = 0 and the component split as witness.
PackingCertificate stp_number(const Graph& g);

// Exhaustive scan of all set partitions (restricted growth strings in
// lexicographic order). Rejects n > n_limit.
PartitionOracleResult partition_oracle(const Graph& g, int k, int n_limit = 12);

// Minimum forest cover via binary search on k over the same union engine.
ForestCover arboricity(const Graph& g);

// Exhaustive induced-subgraph scan for a density violation
// |E(H)| > k(|V(H)|-1); nullopt means a(g) <= k. Rejects n > n_limit.
std::optional<DensityWitness> density_witness(const Graph& g, int k, int n_limit = 16);

// Visits all set partitions of {0..n-1} as block-id arrays. Returns false
// from the callback to stop early.
void for_each_set_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit);

}  // namespace stp
