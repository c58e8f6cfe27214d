#pragma once

#include <functional>
#include <string>

#include "stp/packing.hpp"

namespace stp {

enum class SurfaceKind { Cylinder, Sphere, OtherRevolution };
enum class RigidityDecision { Rigid, NotRigid, Unknown };

const char* decision_name(RigidityDecision d);

struct RigidityReport {
    std::string mode;  // "body-bar(d)" or "surface(<kind>)"
    RigidityDecision decision = RigidityDecision::Unknown;
    int required_trees = 0;          // body-bar: d(d+1)/2
    std::vector<EdgeList> trees;     // disjoint spanning trees backing RIGID
    EdgeList tree;                   // surface split: the spanning tree
    EdgeList unicyclic;              // surface split: spanning, one cycle per component
    std::optional<VertexPartition> witness;  // partition behind NOT_RIGID when available
    std::string note;
};

// Rigid in dimension d iff the graph packs d(d+1)/2 edge-disjoint spanning
// trees; certificates come straight from the packing engine.
RigidityReport body_bar_rigid(const Graph& g, int d);

// Rigidity on a surface of revolution. Complete graphs are rigid outright;
// a cylinder needs two disjoint spanning trees; other non-sphere surfaces
// need a spanning tree plus an edge-disjoint spanning subgraph whose
// components each carry exactly one cycle (decided exactly for n <= 9 by
// spanning-tree enumeration, by a sufficient test above that). The sphere
// case is out of scope and always UNKNOWN.
RigidityReport surface_rigid(const Graph& g, SurfaceKind kind);

struct FlowReport {
    int tau = 0;
    bool has_bound = false;
    std::string phi_upper;  // "3" when tau >= 4, "<4" when tau == 3
    std::string basis;      // which hypothesis fired
};

FlowReport flow_implications(const Graph& g);

// Visits every spanning tree (contraction/deletion order, deterministic);
// the callback returns false to stop early.
void enumerate_spanning_trees(const Graph& g, const std::function<bool(const EdgeList&)>& visit);

}  // namespace stp
