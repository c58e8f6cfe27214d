#include "stp/graph.hpp"

#include <algorithm>
#include <sstream>

namespace stp {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw Error("graph order must be nonnegative, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v)
            throw Error("loop rejected at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(int u, int v) const {
    auto pairs = edges_;
    pairs.emplace_back(u, v);
    return from_edges(n_, pairs);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (auto e : edges_)
        if (e != std::make_pair(u, v)) pairs.push_back(e);
    if (pairs.size() == edges_.size())
        throw Error("without_edge: edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") not present");
    return from_edges(n_, pairs);
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sequence.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) p.sequence.push_back(g.degree(v));
    std::sort(p.sequence.begin(), p.sequence.end());
    if (!p.sequence.empty()) {
        p.delta = p.sequence.front();
        p.max_degree = p.sequence.back();
    }
    return p;
}

int VertexPartition::t1() const {
    int c = 0;
    for (const auto& b : blocks)
        if (b.size() == 1) ++c;
    return c;
}

VertexPartition VertexPartition::from_block_ids(const std::vector<int>& block_of) {
    // Renumber ids by first appearance so the blocks come out ordered by
    // smallest element.
    std::vector<int> order;
    std::vector<int> remap(block_of.size(), -1);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < static_cast<int>(block_of.size()); ++v) {
        int id = block_of[v];
        if (id < 0) throw Error("negative block id");
        if (id >= static_cast<int>(remap.size())) remap.resize(id + 1, -1);
        if (remap[id] == -1) {
            remap[id] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[remap[id]].push_back(v);
    }
    VertexPartition p;
    p.blocks = std::move(blocks);
    return p;
}

void VertexPartition::validate(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw Error("partition has an empty block");
        for (int v : b) {
            if (v < 0 || v >= n) throw Error("partition vertex out of range");
            if (seen[v]) throw Error("partition blocks overlap at vertex " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw Error("partition misses vertex " + std::to_string(v));
}

int connected_components(const Graph& g, std::vector<int>& component_of) {
    int n = g.order();
    component_of.assign(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (component_of[s] != -1) continue;
        component_of[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (component_of[w] == -1) {
                    component_of[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    std::vector<int> comp;
    return connected_components(g, comp) == 1;
}

int boundary_size(const Graph& g, const std::vector<int>& side) {
    int n = g.order();
    if (side.empty() || static_cast<int>(side.size()) >= n)
        throw Error("boundary side must be a nonempty proper subset");
    std::vector<char> in(n, 0);
    for (int v : side) {
        if (v < 0 || v >= n) throw Error("boundary side vertex out of range");
        if (in[v]) throw Error("boundary side repeats vertex " + std::to_string(v));
        in[v] = 1;
    }
    int cut = 0;
    for (auto [u, v] : g.edges())
        if (in[u] != in[v]) ++cut;
    return cut;
}

int partition_cross_edges(const Graph& g, const VertexPartition& p) {
    p.validate(g.order());
    std::vector<int> block_of(g.order());
    for (int b = 0; b < p.t(); ++b)
        for (int v : p.blocks[b]) block_of[v] = b;
    int cross = 0;
    for (auto [u, v] : g.edges())
        if (block_of[u] != block_of[v]) ++cross;
    return cross;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw Error("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw Error("edge list: negative n or m");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw Error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), pairs);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace stp
