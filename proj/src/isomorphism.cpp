#include "stp/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stp/spectral.hpp"

namespace stp {

namespace {

bool extend(const Graph& a, const Graph& b, const std::vector<int>& order, size_t depth,
            std::vector<int>& image, std::vector<char>& used) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < b.order(); ++w) {
        if (used[w] || b.degree(w) != a.degree(v)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            int prev = order[i];
            if (a.has_edge(v, prev) != b.has_edge(w, image[prev])) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        if (extend(a, b, order, depth + 1, image, used)) return true;
        used[w] = 0;
        image[v] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    if (n == 0) return true;

    auto da = degree_profile(a).sequence;
    auto db = degree_profile(b).sequence;
    if (da != db) return false;

    if (n >= 5) {
        auto sa = jacobi_eigensym(adjacency_matrix(a), n).values;
        auto sb = jacobi_eigensym(adjacency_matrix(b), n).values;
        for (int i = 0; i < n; ++i)
            if (std::abs(sa[i] - sb[i]) > 1e-6) return false;
    }

    // Map high-degree vertices first; neighbors of mapped vertices get
    // priority so the adjacency constraints bite early.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    return extend(a, b, order, 0, image, used);
}

}  // namespace stp
