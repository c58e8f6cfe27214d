#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stp/extremal.hpp"
#include "stp/rng.hpp"
#include "stp/spectral.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

using namespace stp;
using namespace testsupport;

namespace {

Graph random_graph_local(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) pairs.emplace_back(i, j);
    return Graph::from_edges(n, pairs);
}

}  // namespace

TEST_CASE("known spectra") {
    auto rep = spectral_report(cycle_graph(4));
    CHECK(rep.adjacency_eigs[0] == doctest::Approx(2).epsilon(1e-10));
    CHECK(rep.adjacency_eigs[1] == doctest::Approx(0).epsilon(1e-10));
    CHECK(rep.adjacency_eigs[2] == doctest::Approx(0).epsilon(1e-10));
    CHECK(rep.adjacency_eigs[3] == doctest::Approx(-2).epsilon(1e-10));
    CHECK(rep.laplacian_eigs[0] == doctest::Approx(4).epsilon(1e-10));
    CHECK(rep.laplacian_eigs[1] == doctest::Approx(2).epsilon(1e-10));
    CHECK(rep.laplacian_eigs[2] == doctest::Approx(2).epsilon(1e-10));
    CHECK(std::abs(rep.laplacian_eigs[3]) < 1e-10);

    rep = spectral_report(complete_graph(5));
    CHECK(rep.rho == doctest::Approx(4).epsilon(1e-10));
    CHECK(rep.lambda2 == doctest::Approx(-1).epsilon(1e-10));
    for (int i = 0; i < 4; ++i)
        CHECK(rep.laplacian_eigs[i] == doctest::Approx(5).epsilon(1e-10));

    // two cliques, no cross edges: rho = n - delta - 2 at (n, delta) = (13, 4)
    rep = spectral_report(book_graph(13, 4, 0));
    CHECK(rep.rho == doctest::Approx(7).epsilon(1e-10));
    CHECK(rep.perron.empty());  // disconnected

    CHECK(rep.residual <= 1e-10 * 13);
}

TEST_CASE("perron pairs") {
    auto [rho, x] = perron_pair(complete_graph(4));
    CHECK(rho == doctest::Approx(3).epsilon(1e-10));
    for (double xi : x) CHECK(xi == doctest::Approx(0.5).epsilon(1e-9));

    auto [rho_star, xs] = perron_pair(star_graph(4));
    CHECK(rho_star == doctest::Approx(2).epsilon(1e-10));
    for (double xi : xs) CHECK(xi > 0);

    auto [rho_b, xb] = perron_pair(book_graph(13, 4, 1));
    CHECK(rho_b > 7);
    CHECK(rho_b < 8);
    for (double xi : xb) CHECK(xi > 0);

    CHECK_THROWS_AS(perron_pair(book_graph(13, 4, 0)), Error);
}

TEST_CASE("perron vector constant on vertex-transitive graphs") {
    for (const Graph& g : {complete_graph(7), cycle_graph(9), petersen_graph()}) {
        auto [rho, x] = perron_pair(g);
        for (double xi : x) CHECK(std::abs(xi - x[0]) < 1e-10);
    }
}

TEST_CASE("jacobi matches the exact quotient value on hub graphs") {
    // oracle: bisection on the integer characteristic polynomial of the
    // degree-class quotient
    double oracle = book_rho_quotient_oracle(13, 4, 1);
    CHECK(oracle == doctest::Approx(7.0211245316).epsilon(1e-9));
    CHECK(std::abs(perron_pair(book_graph(13, 4, 1)).first - oracle) < 1e-9);

    for (auto [n, d, i] : {std::array<int, 3>{14, 4, 1}, {13, 4, 2}, {14, 5, 4}, {16, 6, 4}}) {
        double o = book_rho_quotient_oracle(n, d, i);
        CHECK(std::abs(perron_pair(book_graph(n, d, i)).first - o) < 1e-9);
    }
}

TEST_CASE("trace identities on random graphs") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(1, 30);
        Graph g = random_graph_local(rng, n, rng.unit());
        auto rep = spectral_report(g);
        double sum = 0, sumsq = 0;
        for (double ev : rep.adjacency_eigs) {
            sum += ev;
            sumsq += ev * ev;
        }
        CHECK(std::abs(sum) < 1e-8);
        CHECK(std::abs(sumsq - 2.0 * g.size()) < 1e-8);
        CHECK(rep.laplacian_eigs.back() > -1e-10);
        CHECK(std::abs(rep.laplacian_eigs.back()) < 1e-9);
        CHECK(rep.residual <= 1e-10 * std::max(1, n));
    }
}

TEST_CASE("degree-based upper bound on the spectral radius") {
    CHECK(hong_upper_bound(5, 10, 4) == doctest::Approx(4).epsilon(1e-12));
    CHECK(hong_upper_bound(5, 4, 1) == doctest::Approx(2).epsilon(1e-12));
    CHECK(hong_upper_bound(5, 5, 2) == doctest::Approx(2).epsilon(1e-12));
    CHECK_THROWS_AS(hong_upper_bound(10, 1, 5), Error);

    Rng rng(77);
    int tested = 0;
    while (tested < 2000) {
        int n = rng.range(2, 25);
        Graph g = random_graph_local(rng, n, 0.2 + 0.7 * rng.unit());
        auto prof = degree_profile(g);
        if (prof.delta < 1) continue;
        ++tested;
        double rho = spectral_report(g).rho;
        CHECK(rho <= hong_upper_bound(n, g.size(), prof.delta) + 1e-8);
    }
}

TEST_CASE("bound is monotone in the degree parameter") {
    // f(x) = (x-1)/2 + sqrt(2q - px + (1+x)^2/4) decreases over the valid
    // range when 2q <= p(p-1).
    Rng rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        long long p = rng.range(2, 50);
        long long q = rng.below(static_cast<int>(p * (p - 1) / 2 + 1));
        double prev = std::numeric_limits<double>::infinity();
        for (long long x = 0; x <= p - 1; ++x) {
            double radicand = 2.0 * q - static_cast<double>(p) * x + (1.0 + x) * (1.0 + x) / 4.0;
            if (radicand < 0) break;
            double f = (x - 1.0) / 2.0 + std::sqrt(radicand);
            CHECK(f <= prev + 1e-12);
            prev = f;
        }
    }
}

TEST_CASE("edge rotation") {
    // path 0-1-2: moving edge 1-2 to 0-2 relabels the path
    auto p3 = path_graph(3);
    auto r = rotate_edges(p3, 0, 1, {2});
    CHECK(r.size() == 2);
    CHECK(r.has_edge(0, 1));
    CHECK(r.has_edge(0, 2));

    // rotation toward the endpoint with the larger perron entry increases rho
    auto p4 = path_graph(4);
    auto rot = rotate_edges(p4, 1, 2, {3});
    CHECK(spectral_report(rot).rho > spectral_report(p4).rho + 1e-10);

    CHECK_THROWS_AS(rotate_edges(p4, 1, 2, {}), Error);
    CHECK_THROWS_AS(rotate_edges(p4, 0, 1, {0}), Error);
    CHECK_THROWS_AS(rotate_edges(complete_graph(4), 0, 1, {2}), Error);
}

TEST_CASE("rotation toward the heavier endpoint never decreases rho") {
    Rng rng(55);
    int done = 0;
    while (done < 150) {
        int n = rng.range(4, 10);
        Graph g = random_graph_local(rng, n, 0.45);
        if (!is_connected(g)) continue;
        auto [rho, x] = perron_pair(g);
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        if (x[u] < x[v]) std::swap(u, v);
        // admissible moved set: neighbors of v, not of u, not u itself
        std::vector<int> moved;
        for (int w : g.neighbors(v))
            if (w != u && !g.has_edge(u, w)) moved.push_back(w);
        if (moved.empty()) continue;
        moved.resize(1 + rng.below(static_cast<int>(moved.size())));
        Graph star = rotate_edges(g, u, v, moved);
        double rho2 = spectral_report(star).rho;
        CHECK(rho2 > rho - 1e-10);
        ++done;
    }
}
