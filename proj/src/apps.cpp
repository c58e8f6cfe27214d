#include "stp/apps.hpp"

#include <algorithm>
#include <set>

namespace stp {

const char* decision_name(RigidityDecision d) {
    switch (d) {
        case RigidityDecision::Rigid: return "RIGID";
        case RigidityDecision::NotRigid: return "NOT_RIGID";
        case RigidityDecision::Unknown: return "UNKNOWN";
    }
    return "?";
}

RigidityReport body_bar_rigid(const Graph& g, int d) {
    if (d < 1) throw Error("body_bar_rigid: dimension must be >= 1");
    RigidityReport rep;
    rep.mode = "body-bar(" + std::to_string(d) + ")";
    rep.required_trees = d * (d + 1) / 2;
    if (!is_connected(g)) {
        rep.decision = RigidityDecision::NotRigid;
        std::vector<int> comp;
        connected_components(g, comp);
        rep.witness = VertexPartition::from_block_ids(comp);
        rep.note = "disconnected";
        return rep;
    }
    auto dec = has_k_trees(g, rep.required_trees);
    if (dec.yes) {
        rep.decision = RigidityDecision::Rigid;
        rep.trees = std::move(dec.trees);
    } else {
        rep.decision = RigidityDecision::NotRigid;
        rep.witness = std::move(dec.witness);
    }
    return rep;
}

namespace {

struct MEdge {
    int u, v;
    std::pair<int, int> orig;
};

// Supervertices keep original labels, so connectivity counts distinct
// labels seen on edges against the supervertex count nv.
bool multigraph_connected(const std::vector<MEdge>& edges, int nv, int label_bound) {
    if (nv <= 1) return true;
    std::vector<int> parent(label_bound, -1);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int seen = 0, comps = 0;
    for (const auto& e : edges) {
        for (int x : {e.u, e.v}) {
            if (parent[x] == -1) {
                parent[x] = x;
                ++seen;
                ++comps;
            }
        }
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return seen == nv && comps == 1;
}

bool enumerate_trees_rec(std::vector<MEdge> edges, int nv, int label_bound, EdgeList& tree,
                         const std::function<bool(const EdgeList&)>& visit) {
    if (nv == 1) return visit(tree);
    if (edges.empty()) return true;
    MEdge e = edges.front();

    // Contract branch: e joins the tree; parallels of e become loops and die.
    {
        std::vector<MEdge> next;
        next.reserve(edges.size());
        for (size_t i = 1; i < edges.size(); ++i) {
            MEdge f = edges[i];
            if (f.u == e.v) f.u = e.u;
            if (f.v == e.v) f.v = e.u;
            if (f.u != f.v) next.push_back(f);
        }
        tree.push_back(e.orig);
        bool go = enumerate_trees_rec(std::move(next), nv - 1, label_bound, tree, visit);
        tree.pop_back();
        if (!go) return false;
    }

    // Delete branch: only when e is not a bridge of the current multigraph.
    {
        std::vector<MEdge> rest(edges.begin() + 1, edges.end());
        if (multigraph_connected(rest, nv, label_bound))
            return enumerate_trees_rec(std::move(rest), nv, label_bound, tree, visit);
    }
    return true;
}

}  // namespace

void enumerate_spanning_trees(const Graph& g,
                              const std::function<bool(const EdgeList&)>& visit) {
    int n = g.order();
    if (n == 0) return;
    if (!is_connected(g)) return;
    if (n == 1) {
        EdgeList empty;
        visit(empty);
        return;
    }
    std::vector<MEdge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.push_back({u, v, {u, v}});
    EdgeList tree;
    enumerate_trees_rec(std::move(edges), n, n, tree, visit);
}

namespace {

// Splits the edges outside the tree into per-component spanning unicyclic
// subgraphs when every leftover component carries a cycle and covers V.
bool unicyclic_complement(const Graph& g, const EdgeList& tree, EdgeList& out) {
    int n = g.order();
    std::vector<char> in_tree_edge(g.size(), 0);
    std::vector<std::pair<int, int>> sorted_tree = tree;
    std::sort(sorted_tree.begin(), sorted_tree.end());
    const auto& all = g.edges();
    size_t ti = 0;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // leftover graph (nbr, edge idx)
    std::vector<int> eu, ev;
    for (int e = 0; e < g.size(); ++e) {
        bool tree_edge = ti < sorted_tree.size() && all[e] == sorted_tree[ti];
        if (tree_edge) {
            ++ti;
            continue;
        }
        auto [u, v] = all[e];
        int idx = static_cast<int>(eu.size());
        eu.push_back(u);
        ev.push_back(v);
        adj[u].emplace_back(v, idx);
        adj[v].emplace_back(u, idx);
    }
    // Per leftover component: vertex count, edge count, a BFS tree + one
    // extra edge makes the unicyclic piece.
    std::vector<int> comp(n, -1);
    out.clear();
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = s;
        std::vector<int> verts{s};
        std::vector<char> edge_used(eu.size(), 0);
        EdgeList bfs_tree;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [w, e] : adj[v]) {
                if (comp[w] == -1) {
                    comp[w] = s;
                    verts.push_back(w);
                    queue.push_back(w);
                    bfs_tree.emplace_back(std::min(eu[e], ev[e]), std::max(eu[e], ev[e]));
                    edge_used[e] = 1;
                }
            }
        }
        long long inside = 0;
        int extra = -1;
        for (int e = 0; e < static_cast<int>(eu.size()); ++e) {
            if (comp[eu[e]] == s && comp[ev[e]] == s) {
                ++inside;
                if (!edge_used[e] && extra == -1) extra = e;
            }
        }
        if (inside < static_cast<long long>(verts.size())) return false;  // tree-like or isolated
        for (auto& e : bfs_tree) out.push_back(e);
        out.emplace_back(std::min(eu[extra], ev[extra]), std::max(eu[extra], ev[extra]));
    }
    std::sort(out.begin(), out.end());
    return true;
}

bool is_complete(const Graph& g) {
    long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

}  // namespace

RigidityReport surface_rigid(const Graph& g, SurfaceKind kind) {
    if (!is_connected(g)) throw Error("surface_rigid requires a connected graph");
    RigidityReport rep;
    int n = g.order();
    switch (kind) {
        case SurfaceKind::Sphere:
            rep.mode = "surface(sphere)";
            rep.decision = RigidityDecision::Unknown;
            rep.note = "sphere case out of scope";
            return rep;
        case SurfaceKind::Cylinder:
            rep.mode = "surface(cylinder)";
            break;
        case SurfaceKind::OtherRevolution:
            rep.mode = "surface(other-revolution)";
            break;
    }

    if (is_complete(g)) {
        rep.decision = RigidityDecision::Rigid;
        rep.note = "complete graph";
        return rep;
    }

    if (kind == SurfaceKind::Cylinder) {
        auto dec = has_k_trees(g, 2);
        if (dec.yes) {
            rep.decision = RigidityDecision::Rigid;
            rep.trees = std::move(dec.trees);
        } else {
            rep.decision = RigidityDecision::NotRigid;
            rep.witness = std::move(dec.witness);
        }
        return rep;
    }

    // Other surface of revolution: want a spanning tree T with every
    // component of G - E(T) holding at least one cycle and covering V.
    // Counting rules it out below 2n-1 edges.
    if (g.size() < 2 * n - 1) {
        rep.decision = RigidityDecision::NotRigid;
        rep.note = "fewer than 2n-1 edges";
        return rep;
    }
    if (n <= 9) {
        bool found = false;
        enumerate_spanning_trees(g, [&](const EdgeList& t) {
            EdgeList f;
            if (unicyclic_complement(g, t, f)) {
                rep.tree = t;
                std::sort(rep.tree.begin(), rep.tree.end());
                rep.unicyclic = std::move(f);
                found = true;
                return false;
            }
            return true;
        });
        rep.decision = found ? RigidityDecision::Rigid : RigidityDecision::NotRigid;
        return rep;
    }
    // Beyond exact range: two disjoint spanning trees plus any spare edge
    // are sufficient; failing that we cannot conclude.
    auto dec = has_k_trees(g, 2);
    if (dec.yes && g.size() >= 2 * n - 1) {
        rep.tree = dec.trees[0];
        rep.unicyclic = dec.trees[1];
        std::set<std::pair<int, int>> in_trees(dec.trees[0].begin(), dec.trees[0].end());
        in_trees.insert(dec.trees[1].begin(), dec.trees[1].end());
        for (auto e : g.edges()) {
            if (!in_trees.count(e)) {
                rep.unicyclic.push_back(e);
                break;
            }
        }
        std::sort(rep.unicyclic.begin(), rep.unicyclic.end());
        rep.decision = RigidityDecision::Rigid;
        rep.note = "sufficient test (two trees + spare edge)";
    } else {
        rep.decision = RigidityDecision::Unknown;
        rep.note = "sufficient test inconclusive";
    }
    return rep;
}

FlowReport flow_implications(const Graph& g) {
    if (!is_connected(g)) throw Error("flow_implications requires a connected graph");
    FlowReport rep;
    rep.tau = stp_number(g).tau;
    if (rep.tau >= 4) {
        rep.has_bound = true;
        rep.phi_upper = "3";
        rep.basis = "tau>=4";
    } else if (rep.tau == 3) {
        rep.has_bound = true;
        rep.phi_upper = "<4";
        rep.basis = "tau>=3";
    }
    return rep;
}

}  // namespace stp
