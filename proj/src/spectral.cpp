#include "stp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stp/kernels.hpp"

namespace stp {

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenSym jacobi_eigensym(std::vector<double> a, int n) {
    const auto& k = kern::ops();
    EigenSym out;
    out.n = n;
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) out.vectors[static_cast<size_t>(i) * n + i] = 1.0;
    if (n == 0) return out;

    double norm = std::sqrt(k.norm2sq(a.data(), a.size()));
    const double stop = 1e-12 * std::max(1.0, norm);
    // vectors holds V^T, so V <- V*J becomes a row rotation here too.
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a, n) > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double app = a[p * n + p], aqq = a[q * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                double* rp = a.data() + static_cast<size_t>(p) * n;
                double* rq = a.data() + static_cast<size_t>(q) * n;
                k.rotate_pair(rp, rq, static_cast<size_t>(n), c, s);
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    a[i * n + p] = rp[i];
                    a[i * n + q] = rq[i];
                }
                rp[p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                rq[q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                rp[q] = 0.0;
                rq[p] = 0.0;

                k.rotate_pair(out.vectors.data() + static_cast<size_t>(p) * n,
                              out.vectors.data() + static_cast<size_t>(q) * n,
                              static_cast<size_t>(n), c, s);
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });
    out.values.resize(n);
    std::vector<double> sorted(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        out.values[i] = a[order[i] * n + order[i]];
        std::copy_n(out.vectors.data() + static_cast<size_t>(order[i]) * n, n,
                    sorted.data() + static_cast<size_t>(i) * n);
    }
    out.vectors = std::move(sorted);
    return out;
}

std::vector<double> adjacency_matrix(const Graph& g) {
    int n = g.order();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<size_t>(u) * n + v] = 1.0;
        a[static_cast<size_t>(v) * n + u] = 1.0;
    }
    return a;
}

std::vector<double> laplacian_matrix(const Graph& g) {
    int n = g.order();
    std::vector<double> l(static_cast<size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) {
        l[static_cast<size_t>(u) * n + v] = -1.0;
        l[static_cast<size_t>(v) * n + u] = -1.0;
        l[static_cast<size_t>(u) * n + u] += 1.0;
        l[static_cast<size_t>(v) * n + v] += 1.0;
    }
    return l;
}

namespace {

// max_i ||M x_i - lambda_i x_i||_2 over all eigenpairs.
double max_residual(const std::vector<double>& m, const EigenSym& e) {
    const auto& k = kern::ops();
    int n = e.n;
    if (n == 0) return 0.0;
    std::vector<double> r(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* x = e.vector(i);
        for (int row = 0; row < n; ++row)
            r[row] = k.dot(m.data() + static_cast<size_t>(row) * n, x, n) - e.values[i] * x[row];
        worst = std::max(worst, std::sqrt(k.norm2sq(r.data(), n)));
    }
    return worst;
}

// Power iteration on A + I; used only if Jacobi's top vector shows sign
// noise, which connected graphs rule out analytically but not numerically.
std::vector<double> power_perron(const Graph& g, double& rho_out) {
    const auto& k = kern::ops();
    int n = g.order();
    auto a = adjacency_matrix(g);
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    for (int it = 0; it < 20000; ++it) {
        for (int row = 0; row < n; ++row)
            y[row] = k.dot(a.data() + static_cast<size_t>(row) * n, x.data(), n) + x[row];
        double nrm = std::sqrt(k.norm2sq(y.data(), n));
        for (int row = 0; row < n; ++row) y[row] /= nrm;
        double delta = 0.0;
        for (int row = 0; row < n; ++row) delta = std::max(delta, std::abs(y[row] - x[row]));
        x = y;
        if (delta < 1e-15) break;
    }
    std::vector<double> ax(n);
    for (int row = 0; row < n; ++row)
        ax[row] = k.dot(a.data() + static_cast<size_t>(row) * n, x.data(), n);
    rho_out = k.dot(ax.data(), x.data(), n);
    return x;
}

}  // namespace

SpectralReport spectral_report(const Graph& g) {
    int n = g.order();
    if (n < 1) throw Error("spectral_report: graph must have at least one vertex");
    SpectralReport rep;

    auto a = adjacency_matrix(g);
    auto ea = jacobi_eigensym(a, n);
    rep.adjacency_eigs = ea.values;
    rep.rho = ea.values[0];
    rep.lambda2 = n >= 2 ? ea.values[1] : 0.0;

    auto l = laplacian_matrix(g);
    auto el = jacobi_eigensym(l, n);
    rep.laplacian_eigs = el.values;

    rep.residual = std::max(max_residual(a, ea), max_residual(l, el));

    if (is_connected(g)) {
        std::vector<double> x(ea.vector(0), ea.vector(0) + n);
        int first = 0;
        while (first < n && x[first] == 0.0) ++first;
        if (first < n && x[first] < 0.0)
            for (auto& v : x) v = -v;
        bool positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });
        if (!positive) {
            double rho2;
            x = power_perron(g, rho2);
        }
        rep.perron = std::move(x);
    }
    return rep;
}

std::pair<double, std::vector<double>> perron_pair(const Graph& g) {
    if (!is_connected(g))
        throw Error("perron_pair requires a connected graph");
    auto rep = spectral_report(g);
    return {rep.rho, rep.perron};
}

double hong_upper_bound(long long n, long long m, long long delta) {
    if (n < 1 || delta < 1) throw Error("hong_upper_bound: need n >= 1 and delta >= 1");
    double radicand = 2.0 * m - static_cast<double>(n) * delta +
                      (delta + 1.0) * (delta + 1.0) / 4.0;
    if (radicand < 0.0)
        throw Error("hong_upper_bound: negative radicand (2m - n*delta + (delta+1)^2/4 = " +
                    std::to_string(radicand) + ")");
    return (delta - 1.0) / 2.0 + std::sqrt(radicand);
}

Graph rotate_edges(const Graph& g, int u, int v, const std::vector<int>& moved) {
    if (moved.empty()) throw Error("rotate_edges: S must be nonempty");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
        throw Error("rotate_edges: invalid vertices");
    for (int w : moved) {
        if (w == u) throw Error("rotate_edges: u may not belong to S");
        if (!g.has_edge(v, w))
            throw Error("rotate_edges: vertex " + std::to_string(w) + " not a neighbor of v");
        if (g.has_edge(u, w))
            throw Error("rotate_edges: vertex " + std::to_string(w) +
                        " already adjacent to u");
    }
    std::vector<char> in_s(g.order(), 0);
    for (int w : moved) in_s[w] = 1;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.size());
    for (auto [x, y] : g.edges()) {
        if ((x == v && in_s[y]) || (y == v && in_s[x])) continue;
        pairs.emplace_back(x, y);
    }
    for (int w : moved) pairs.emplace_back(u, w);
    return Graph::from_edges(g.order(), pairs);
}

}  // namespace stp
