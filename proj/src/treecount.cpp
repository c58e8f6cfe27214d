#include "stp/treecount.hpp"

namespace stp {

TreeCount spanning_tree_count(const Graph& g) {
    int n = g.order();
    if (n < 1) throw Error("spanning_tree_count: graph must have at least one vertex");
    if (n == 1) return {bigint(1)};

    // Laplacian minor: drop row/column 0.
    int d = n - 1;
    std::vector<bigint> a(static_cast<size_t>(d) * d, 0);
    for (int v = 1; v < n; ++v) a[static_cast<size_t>(v - 1) * d + (v - 1)] = g.degree(v);
    for (auto [u, v] : g.edges()) {
        if (u == 0 || v == 0) continue;
        a[static_cast<size_t>(u - 1) * d + (v - 1)] = -1;
        a[static_cast<size_t>(v - 1) * d + (u - 1)] = -1;
    }

    // Bareiss elimination: exact over the integers, divisions are known to
    // be exact. Row swaps flip the sign.
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[static_cast<size_t>(k) * d + k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < d; ++r) {
                if (a[static_cast<size_t>(r) * d + k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == -1) return {bigint(0)};
            for (int c = 0; c < d; ++c)
                std::swap(a[static_cast<size_t>(k) * d + c], a[static_cast<size_t>(pivot) * d + c]);
            sign = -sign;
        }
        const bigint& akk = a[static_cast<size_t>(k) * d + k];
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                bigint num = akk * a[static_cast<size_t>(i) * d + j] -
                             a[static_cast<size_t>(i) * d + k] * a[static_cast<size_t>(k) * d + j];
                a[static_cast<size_t>(i) * d + j] = num / prev;
            }
            a[static_cast<size_t>(i) * d + k] = 0;
        }
        prev = akk;
    }
    bigint det = a[static_cast<size_t>(d - 1) * d + (d - 1)];
    if (sign < 0) det = -det;
    return {det};
}

}  // namespace stp
