#include "stp/packing.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace stp {

namespace {

// Union of k graphic forests maintained under augmenting insertion.
// Insertion follows the Roskind-Tarjan labeling scheme: a breadth-first
// search over edges where examining edge h against forest f either finds a
// free slot (h's endpoints lie in different components of f) or labels the
// edges of h's fundamental cycle in f. Augmenting along the label chain
// performs the exchange cascade.
class ForestUnion {
public:
    ForestUnion(const Graph& g, int k)
        : g_(g), k_(k), owner_(g.size(), -1), adj_(k, std::vector<std::vector<std::pair<int, int>>>(g.order())) {}

    // Inserts every edge in lexicographic order; returns the number placed.
    int run() {
        for (int e = 0; e < g_.size(); ++e)
            if (try_insert(e)) ++placed_;
        return placed_;
    }

    int placed() const { return placed_; }

    std::vector<EdgeList> forests() const {
        std::vector<EdgeList> out(k_);
        for (int e = 0; e < g_.size(); ++e)
            if (owner_[e] >= 0) out[owner_[e]].push_back(g_.edges()[e]);
        for (auto& f : out) std::sort(f.begin(), f.end());
        return out;
    }

    // Violating partition from the final failure structure: seed a label
    // pass with every unplaced edge, take the components of the labeled
    // clump, and leave the rest as singletons. With no unplaced edges this
    // is the all-singleton partition.
    VertexPartition failure_partition() const {
        int n = g_.order(), m = g_.size();
        std::vector<char> labeled(m, 0);
        std::deque<int> queue;
        for (int e = 0; e < m; ++e) {
            if (owner_[e] == -1) {
                labeled[e] = 1;
                queue.push_back(e);
            }
        }
        std::vector<int> path;
        while (!queue.empty()) {
            int h = queue.front();
            queue.pop_front();
            auto [hu, hv] = g_.edges()[h];
            for (int f = 0; f < k_; ++f) {
                if (owner_[h] == f) continue;
                bool connected = forest_path(f, hu, hv, path);
                assert(connected && "maximal union admits no augmenting edge");
                (void)connected;
                for (int e : path) {
                    if (!labeled[e]) {
                        labeled[e] = 1;
                        queue.push_back(e);
                    }
                }
            }
        }
        // Components of the labeled subgraph; unlabeled vertices stay singletons.
        std::vector<int> comp(n, -1);
        std::vector<std::vector<std::pair<int, int>>> ladj(n);
        for (int e = 0; e < m; ++e) {
            if (!labeled[e]) continue;
            auto [u, v] = g_.edges()[e];
            ladj[u].emplace_back(v, e);
            ladj[v].emplace_back(u, e);
        }
        int next = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1 || ladj[s].empty()) continue;
            comp[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : ladj[v]) {
                    if (comp[w] == -1) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        for (int v = 0; v < n; ++v)
            if (comp[v] == -1) comp[v] = next++;
        return VertexPartition::from_block_ids(comp);
    }

private:
    bool try_insert(int e0) {
        int m = g_.size();
        parent_.assign(m, kUnlabeled);
        parent_[e0] = kRoot;
        std::deque<int> queue{e0};
        std::vector<int> path;
        while (!queue.empty()) {
            int h = queue.front();
            queue.pop_front();
            auto [hu, hv] = g_.edges()[h];
            for (int f = 0; f < k_; ++f) {
                if (owner_[h] == f) continue;
                if (!forest_path(f, hu, hv, path)) {
                    cascade(h, f);
                    return true;
                }
                for (int e : path) {
                    if (parent_[e] == kUnlabeled) {
                        parent_[e] = h;
                        queue.push_back(e);
                    }
                }
            }
        }
        return false;
    }

    // Moves x into forest `into`, then its labeling predecessor into the
    // slot x vacated, up the chain to the root edge.
    void cascade(int x, int into) {
        while (x != kRoot) {
            int old = owner_[x];
            if (old != -1) forest_remove(old, x);
            forest_add(into, x);
            into = old;
            x = parent_[x];
        }
    }

    void forest_add(int f, int e) {
        auto [u, v] = g_.edges()[e];
        adj_[f][u].emplace_back(v, e);
        adj_[f][v].emplace_back(u, e);
        owner_[e] = f;
    }

    void forest_remove(int f, int e) {
        auto [u, v] = g_.edges()[e];
        auto drop = [e](std::vector<std::pair<int, int>>& list) {
            for (size_t i = 0; i < list.size(); ++i) {
                if (list[i].second == e) {
                    list.erase(list.begin() + i);
                    return;
                }
            }
        };
        drop(adj_[f][u]);
        drop(adj_[f][v]);
        owner_[e] = -1;
    }

    // BFS path u -> v inside forest f. Returns true and fills path_edges
    // when connected, false otherwise.
    bool forest_path(int f, int u, int v, std::vector<int>& path_edges) const {
        path_edges.clear();
        if (u == v) return true;
        int n = g_.order();
        prev_edge_.assign(n, -1);
        prev_vertex_.assign(n, -1);
        prev_vertex_[u] = u;
        std::deque<int> queue{u};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (auto [y, e] : adj_[f][x]) {
                if (prev_vertex_[y] != -1) continue;
                prev_vertex_[y] = x;
                prev_edge_[y] = e;
                if (y == v) {
                    for (int at = v; at != u; at = prev_vertex_[at])
                        path_edges.push_back(prev_edge_[at]);
                    std::reverse(path_edges.begin(), path_edges.end());
                    return true;
                }
                queue.push_back(y);
            }
        }
        return false;
    }

    static constexpr int kUnlabeled = -2;
    static constexpr int kRoot = -1;

    const Graph& g_;
    int k_;
    int placed_ = 0;
    std::vector<int> owner_;   // forest index per edge, -1 unplaced
    std::vector<int> parent_;  // label chain of the current insertion
    std::vector<std::vector<std::vector<std::pair<int, int>>>> adj_;  // [forest][vertex]
    mutable std::vector<int> prev_edge_, prev_vertex_;
};

VertexPartition component_partition(const Graph& g) {
    std::vector<int> comp;
    connected_components(g, comp);
    return VertexPartition::from_block_ids(comp);
}

}  // namespace

PackingDecision has_k_trees(const Graph& g, int k) {
    if (k < 1) throw Error("has_k_trees: k must be >= 1");
    int n = g.order();
    PackingDecision out;
    if (n == 0) throw Error("has_k_trees: empty graph");
    if (!is_connected(g)) {
        out.yes = false;
        out.witness = component_partition(g);
        return out;
    }
    ForestUnion eng(g, k);
    int placed = eng.run();
    long long target = static_cast<long long>(k) * (n - 1);
    if (placed == target) {
        out.yes = true;
        out.trees = eng.forests();
    } else {
        out.yes = false;
        out.witness = eng.failure_partition();
    }
    return out;
}

PackingCertificate stp_number(const Graph& g) {
    int n = g.order();
    if (n == 0) throw Error("stp_number: empty graph");
    PackingCertificate cert;
    if (!is_connected(g)) {
        cert.tau = 0;
        cert.violating_partition = component_partition(g);
        return cert;
    }
    if (n == 1) {
        // Single vertex: the empty spanning tree packs for every k; report one.
        cert.tau = 1;
        cert.trees = {EdgeList{}};
        return cert;
    }
    int kmax = g.size() / (n - 1);
    int k = 1;
    for (; k <= kmax; ++k) {
        auto dec = has_k_trees(g, k);
        if (!dec.yes) break;
        cert.tau = k;
        cert.trees = std::move(dec.trees);
    }
    auto above = has_k_trees(g, cert.tau + 1);
    assert(!above.yes);
    cert.violating_partition = std::move(above.witness);
    return cert;
}

PartitionOracleResult partition_oracle(const Graph& g, int k, int n_limit) {
    int n = g.order();
    if (n > n_limit)
        throw Error("partition_oracle: n = " + std::to_string(n) + " exceeds limit " +
                    std::to_string(n_limit) + " (use stp_number instead)");
    if (n == 0) throw Error("partition_oracle: empty graph");
    if (k < 1) throw Error("partition_oracle: k must be >= 1");

    const auto& edges = g.edges();
    PartitionOracleResult best;
    bool have = false;
    int best_t = 0;
    // Ties in the slack go to the partition with more parts, so the trivial
    // one-block partition (always slack 0) never shadows a real witness.
    for_each_set_partition(n, [&](const std::vector<int>& ids, int t) {
        long long cross = 0;
        for (auto [u, v] : edges)
            if (ids[u] != ids[v]) ++cross;
        long long slack = cross - static_cast<long long>(k) * (t - 1);
        if (!have || slack < best.min_slack || (slack == best.min_slack && t > best_t)) {
            have = true;
            best.min_slack = slack;
            best_t = t;
            best.minimizing = VertexPartition::from_block_ids(ids);
        }
        return true;
    });
    best.yes = best.min_slack >= 0;
    return best;
}

void for_each_set_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
    if (n <= 0) return;
    std::vector<int> a(n, 0);  // restricted growth string
    std::vector<int> mx(n, 0); // mx[i] = max(a[0..i])
    while (true) {
        int t = mx[n - 1] + 1;
        if (!visit(a, t)) return;
        // Lexicographic successor: bump the rightmost position that can grow.
        int i = n - 1;
        while (i > 0 && a[i] > mx[i - 1]) --i;
        if (i == 0) return;
        ++a[i];
        mx[i] = std::max(mx[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            mx[j] = mx[j - 1];
        }
    }
}

namespace {

bool covers_all_edges(const Graph& g, int k) {
    ForestUnion eng(g, k);
    return eng.run() == g.size();
}

}  // namespace

ForestCover arboricity(const Graph& g) {
    ForestCover out;
    if (g.size() == 0) {
        out.arboricity = 0;
        return out;
    }
    int n = g.order();
    long long m = g.size();
    int lo = static_cast<int>((m + (n - 2)) / (n - 1));  // ceil(m/(n-1)), n >= 2 when m >= 1
    lo = std::max(lo, 1);
    int known_fail = lo - 1;
    int hi = lo;
    while (!covers_all_edges(g, hi)) {
        known_fail = hi;
        hi *= 2;
    }
    while (hi - known_fail > 1) {
        int mid = known_fail + (hi - known_fail) / 2;
        if (covers_all_edges(g, mid))
            hi = mid;
        else
            known_fail = mid;
    }
    out.arboricity = hi;

    ForestUnion eng(g, hi);
    eng.run();
    out.forests = eng.forests();

    if (out.arboricity >= 2) {
        // Certify minimality: the densest clump of the (a-1)-forest failure
        // violates |E(H)| <= (a-1)(|V(H)|-1).
        ForestUnion fail(g, out.arboricity - 1);
        fail.run();
        auto part = fail.failure_partition();
        DensityWitness w;
        long long best = 0;
        for (const auto& block : part.blocks) {
            if (block.size() < 2) continue;
            std::vector<char> in(n, 0);
            for (int v : block) in[v] = 1;
            long long inside = 0;
            for (auto [u, v] : g.edges())
                if (in[u] && in[v]) ++inside;
            long long violation =
                inside - static_cast<long long>(out.arboricity - 1) * (block.size() - 1);
            if (violation > best) {
                best = violation;
                w.vertex_set = block;
                w.edge_count = inside;
                w.k = out.arboricity - 1;
            }
        }
        assert(best > 0 && "failed union must expose a dense block");
        out.witness = std::move(w);
    }
    return out;
}

std::optional<DensityWitness> density_witness(const Graph& g, int k, int n_limit) {
    int n = g.order();
    if (n > n_limit)
        throw Error("density_witness: n = " + std::to_string(n) + " exceeds limit " +
                    std::to_string(n_limit));
    if (k < 0) throw Error("density_witness: k must be >= 0");
    std::optional<DensityWitness> best;
    long long best_violation = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int s = __builtin_popcount(mask);
        if (s < 2) continue;
        long long inside = 0;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) ++inside;
        long long violation = inside - static_cast<long long>(k) * (s - 1);
        if (violation > best_violation) {
            best_violation = violation;
            DensityWitness w;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) w.vertex_set.push_back(v);
            w.edge_count = inside;
            w.k = k;
            best = std::move(w);
        }
    }
    return best;
}

}  // namespace stp
