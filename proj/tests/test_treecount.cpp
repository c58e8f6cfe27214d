#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stp/extremal.hpp"
#include "stp/rng.hpp"
#include "stp/spectral.hpp"
#include "stp/treecount.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

using namespace stp;
using namespace testsupport;

TEST_CASE("cayley and cycles") {
    for (int n = 2; n <= 9; ++n) {
        bigint expect = 1;
        for (int i = 0; i < n - 2; ++i) expect *= n;
        CHECK(spanning_tree_count(complete_graph(n)).count == expect);
    }
    for (int n = 3; n <= 12; ++n)
        CHECK(spanning_tree_count(cycle_graph(n)).count == n);
    CHECK(spanning_tree_count(Graph::from_edges(1, {})).count == 1);
}

TEST_CASE("petersen graph") {
    auto g = petersen_graph();
    CHECK(count_spanning_trees_bruteforce(g) == 2000);
    CHECK(spanning_tree_count(g).count == 2000);
}

TEST_CASE("disconnected graphs have no spanning tree") {
    CHECK(spanning_tree_count(disjoint_union(complete_graph(3), complete_graph(2))).count == 0);
    CHECK(spanning_tree_count(book_graph(13, 4, 0)).count == 0);
}

TEST_CASE("determinant count equals brute force on random graphs") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(2, 8);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.6) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        CHECK(spanning_tree_count(g).count == count_spanning_trees_bruteforce(g));
    }
}

TEST_CASE("laplacian eigenvalue product approximates the exact count") {
    Rng rng(19);
    int done = 0;
    while (done < 40) {
        int n = rng.range(2, 12);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.55) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (!is_connected(g)) continue;
        ++done;
        auto rep = spectral_report(g);
        double prod = 1.0;
        for (int i = 0; i < n - 1; ++i) prod *= rep.laplacian_eigs[i];
        prod /= n;
        double exact = static_cast<double>(spanning_tree_count(g).count);
        CHECK(std::llround(prod) == std::llround(exact));
        CHECK(std::abs(prod - exact) <= 1e-6 * std::max(1.0, exact));
    }
}
