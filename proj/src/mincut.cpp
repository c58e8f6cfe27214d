#include "stp/mincut.hpp"

#include <algorithm>
#include <limits>

namespace stp {

namespace {

CutWitness make_witness(const Graph& g, std::vector<int> side) {
    std::sort(side.begin(), side.end());
    // Normalize: prefer the smaller side, ties to the side holding vertex 0.
    int n = g.order();
    if (2 * static_cast<int>(side.size()) > n ||
        (2 * static_cast<int>(side.size()) == n && side.front() != 0)) {
        std::vector<char> in(n, 0);
        for (int v : side) in[v] = 1;
        std::vector<int> comp;
        comp.reserve(n - side.size());
        for (int v = 0; v < n; ++v)
            if (!in[v]) comp.push_back(v);
        side = std::move(comp);
    }
    CutWitness w;
    w.boundary_size = boundary_size(g, side);
    w.side = std::move(side);
    return w;
}

}  // namespace

std::pair<int, CutWitness> edge_connectivity(const Graph& g) {
    int n = g.order();
    if (n < 2) throw Error("edge_connectivity requires n >= 2");

    std::vector<int> comp;
    if (connected_components(g, comp) > 1) {
        std::vector<int> side;
        for (int v = 0; v < n; ++v)
            if (comp[v] == comp[0]) side.push_back(v);
        return {0, make_witness(g, std::move(side))};
    }

    // Weighted adjacency over supervertices; group[i] tracks the original
    // vertices merged into i.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (auto [u, v] : g.edges()) {
        w[u][v] += 1;
        w[v][u] += 1;
    }
    std::vector<std::vector<int>> group(n);
    for (int v = 0; v < n; ++v) group[v] = {v};
    std::vector<char> merged(n, 0);

    long long best = std::numeric_limits<long long>::max();
    std::vector<int> best_side;

    for (int phase = 0; phase < n - 1; ++phase) {
        std::vector<char> in_a(n, 0);
        std::vector<long long> conn(n, 0);
        int prev = -1, last = -1;
        long long cut_of_phase = 0;
        int active = 0;
        for (int v = 0; v < n; ++v)
            if (!merged[v]) ++active;
        for (int step = 0; step < active; ++step) {
            // Most tightly connected next vertex; ties to the lowest index.
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (merged[v] || in_a[v]) continue;
                if (pick == -1 || conn[v] > conn[pick]) pick = v;
            }
            in_a[pick] = 1;
            prev = last;
            last = pick;
            cut_of_phase = conn[pick];
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !in_a[v]) conn[v] += w[pick][v];
        }
        if (cut_of_phase < best) {
            best = cut_of_phase;
            best_side = group[last];
        }
        // Merge last into prev.
        for (int v = 0; v < n; ++v) {
            if (merged[v] || v == prev || v == last) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        merged[last] = 1;
        group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
    }
    return {static_cast<int>(best), make_witness(g, std::move(best_side))};
}

}  // namespace stp
