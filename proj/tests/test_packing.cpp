#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stp/extremal.hpp"
#include "stp/mincut.hpp"
#include "stp/packing.hpp"
#include "stp/rng.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

using namespace stp;
using namespace testsupport;

namespace {

void check_certificate(const Graph& g, const PackingCertificate& cert) {
    CHECK(static_cast<int>(cert.trees.size()) == cert.tau);
    for (const auto& t : cert.trees) CHECK(is_spanning_tree(g, t));
    CHECK(trees_edge_disjoint(cert.trees));
    if (cert.violating_partition)
        CHECK(partition_violates(g, *cert.violating_partition, cert.tau + 1));
}

}  // namespace

TEST_CASE("trees pack exactly one tree") {
    for (const Graph& g : {path_graph(6), star_graph(5)}) {
        auto cert = stp_number(g);
        CHECK(cert.tau == 1);
        check_certificate(g, cert);
    }
}

TEST_CASE("small named graphs") {
    auto k4 = stp_number(complete_graph(4));
    CHECK(k4.tau == 2);
    check_certificate(complete_graph(4), k4);

    auto c4 = has_k_trees(cycle_graph(4), 2);
    CHECK_FALSE(c4.yes);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->t() == 4);  // four singletons: 4 < 2*3
    CHECK(partition_violates(cycle_graph(4), *c4.witness, 2));

    auto k6 = has_k_trees(complete_graph(6), 3);
    CHECK(k6.yes);
    CHECK(k6.trees.size() == 3);
    CHECK(trees_edge_disjoint(k6.trees));
    for (const auto& t : k6.trees) CHECK(is_spanning_tree(complete_graph(6), t));

    CHECK(stp_number(book_graph(13, 4, 1)).tau == 1);
}

TEST_CASE("two spread cross edges reach tau 2") {
    // left clique of 5, right of 7, cross edges at distinct endpoints
    CrossPattern p;
    p.links = {{0, 0}, {1, 1}};
    auto fg = family_graph(12, 5, p);
    CHECK(fg.graph.size() == 33);
    CHECK(has_k_trees(fg.graph, 2).yes);
}

TEST_CASE("disconnected graphs") {
    auto g = disjoint_union(complete_graph(3), complete_graph(2));
    auto cert = stp_number(g);
    CHECK(cert.tau == 0);
    REQUIRE(cert.violating_partition.has_value());
    CHECK(cert.violating_partition->t() == 2);
    CHECK(partition_violates(g, *cert.violating_partition, 1));
}

TEST_CASE("partition oracle") {
    auto k4 = partition_oracle(complete_graph(4), 2);
    CHECK(k4.yes);
    CHECK(k4.min_slack == 0);  // all-singleton partition: 6 = 2*3
    CHECK(k4.minimizing.t() == 4);

    auto c4 = partition_oracle(cycle_graph(4), 2);
    CHECK_FALSE(c4.yes);
    CHECK(c4.min_slack == -2);
    CHECK(c4.minimizing.t() == 4);

    // connected graphs always pack one tree
    Rng rng(4);
    int done = 0;
    while (done < 50) {
        int n = rng.range(2, 8);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.5) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (!is_connected(g)) continue;
        ++done;
        CHECK(partition_oracle(g, 1).yes);
    }

    CHECK_THROWS_AS(partition_oracle(complete_graph(13), 2), Error);
}

TEST_CASE("set partition enumeration counts") {
    // Bell numbers
    int counts[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 1; n <= 7; ++n) {
        int seen = 0;
        for_each_set_partition(n, [&](const std::vector<int>&, int) {
            ++seen;
            return true;
        });
        CHECK(seen == counts[n]);
    }
}

TEST_CASE("engine agrees with the exhaustive oracle up to 7 vertices") {
    // labeled exhaustive at n <= 5; one representative per isomorphism
    // class at n = 6, 7 (the verdict is isomorphism-invariant)
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_connected(g)) return true;
            for (int k = 1; k <= 3; ++k) {
                auto a = has_k_trees(g, k);
                auto b = partition_oracle(g, k);
                REQUIRE(a.yes == b.yes);
            }
            return true;
        });
    }
    for (int n = 6; n <= 7; ++n) {
        for (const Graph& g : graphs_up_to_iso(n)) {
            if (!is_connected(g)) continue;
            for (int k = 1; k <= 3; ++k) {
                auto a = has_k_trees(g, k);
                auto b = partition_oracle(g, k);
                REQUIRE(a.yes == b.yes);
                if (!a.yes) CHECK(partition_violates(g, *a.witness, k));
                if (a.yes) CHECK(trees_edge_disjoint(a.trees));
            }
        }
    }
}

TEST_CASE("adding an edge never lowers tau") {
    Rng rng(8);
    int done = 0;
    while (done < 60) {
        int n = rng.range(3, 9);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.55) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (!is_connected(g)) continue;
        int u = rng.below(n), v = rng.below(n);
        if (u == v || g.has_edge(u, v)) continue;
        ++done;
        CHECK(stp_number(g.with_edge(u, v)).tau >= stp_number(g).tau);
    }
}

TEST_CASE("tau at least half the edge connectivity") {
    Rng rng(10);
    int done = 0;
    while (done < 80) {
        int n = rng.range(2, 10);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.6) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (!is_connected(g)) continue;
        ++done;
        CHECK(stp_number(g).tau >= edge_connectivity(g).first / 2);
    }
}

TEST_CASE("arboricity basics") {
    CHECK(arboricity(path_graph(5)).arboricity == 1);
    CHECK(arboricity(star_graph(6)).arboricity == 1);

    auto c5 = arboricity(cycle_graph(5));
    CHECK(c5.arboricity == 2);
    REQUIRE(c5.witness.has_value());
    CHECK(c5.witness->k == 1);
    CHECK(c5.witness->edge_count >
          static_cast<long long>(c5.witness->vertex_set.size()) - 1);

    auto k4 = arboricity(complete_graph(4));
    CHECK(k4.arboricity == 2);
    REQUIRE(k4.witness.has_value());
    CHECK(k4.witness->vertex_set.size() == 4);
    CHECK(k4.witness->edge_count == 6);  // 6 > 1*3

    CHECK(arboricity(Graph::from_edges(3, {})).arboricity == 0);
}

TEST_CASE("forest covers partition the edge set") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(2, 10);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.6) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        auto cover = arboricity(g);
        size_t total = 0;
        for (const auto& f : cover.forests) total += f.size();
        CHECK(total == static_cast<size_t>(g.size()));
        CHECK(trees_edge_disjoint(cover.forests));
        // each forest acyclic
        for (const auto& f : cover.forests) {
            std::vector<int> parent(n);
            for (int v = 0; v < n; ++v) parent[v] = v;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto [u, v] : f) {
                int a = find(u), b = find(v);
                CHECK(a != b);
                parent[a] = b;
            }
        }
    }
}

TEST_CASE("density witnesses") {
    auto k5 = density_witness(complete_graph(5), 2);
    REQUIRE(k5.has_value());
    CHECK(k5->vertex_set.size() == 5);
    CHECK(k5->edge_count == 10);  // 10 > 2*4

    CHECK_FALSE(density_witness(complete_graph(4), 2).has_value());
    CHECK_FALSE(density_witness(path_graph(7), 1).has_value());
    CHECK_THROWS_AS(density_witness(complete_graph(17), 2), Error);
}

TEST_CASE("arboricity matches the density bound on small graphs") {
    Rng rng(33);
    for (int trial = 0; trial < 80; ++trial) {
        int n = rng.range(2, 10);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.6) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (g.size() == 0) continue;
        int a = arboricity(g).arboricity;
        // a = max over subsets of ceil(e(H) / (|H|-1))
        long long best = 1;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            int s = __builtin_popcount(mask);
            if (s < 2) continue;
            long long inside = 0;
            for (auto [u, v] : g.edges())
                if ((mask >> u & 1) && (mask >> v & 1)) ++inside;
            if (inside > 0) best = std::max(best, (inside + s - 2) / (s - 1));
        }
        CHECK(a == best);
        CHECK_FALSE(density_witness(g, a).has_value());
        if (a >= 2) CHECK(density_witness(g, a - 1).has_value());
    }
}

TEST_CASE("arboricity dominates tau") {
    Rng rng(44);
    int done = 0;
    while (done < 60) {
        int n = rng.range(2, 9);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < 0.6) pairs.emplace_back(i, j);
        Graph g = Graph::from_edges(n, pairs);
        if (!is_connected(g) || g.size() == 0) continue;
        ++done;
        int tau = stp_number(g).tau;
        int a = arboricity(g).arboricity;
        CHECK(a >= tau);
        if (g.size() == static_cast<long long>(tau) * (n - 1)) CHECK(a == tau);
    }
}
