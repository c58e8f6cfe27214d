#pragma once

#include <vector>

#include "stp/graph.hpp"

namespace stp {

// Dense symmetric eigensolve by cyclic Jacobi rotations. Eigenvalues come
// out descending; vectors are stored row-major (row i = unit eigenvector of
// values[i]). Deterministic: sweeps walk the upper triangle row by row and
// stop once the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F.
struct EigenSym {
    std::vector<double> values;
    std::vector<double> vectors;  // size n*n, row i at [i*n, (i+1)*n)
    int n = 0;

    const double* vector(int i) const { return vectors.data() + static_cast<size_t>(i) * n; }
};

EigenSym jacobi_eigensym(std::vector<double> a, int n);

struct SpectralReport {
    std::vector<double> adjacency_eigs;  // descending
    std::vector<double> laplacian_eigs;  // descending
    double rho = 0.0;                    // adjacency_eigs[0]
    double lambda2 = 0.0;                // adjacency_eigs[1] when n >= 2
    std::vector<double> perron;          // positive unit vector; empty if disconnected
    double residual = 0.0;               // max ||M x - lambda x||_2 over reported pairs
};

SpectralReport spectral_report(const Graph& g);

// Perron pair of a connected graph: spectral radius and the positive unit
// eigenvector. Throws for disconnected input.
std::pair<double, std::vector<double>> perron_pair(const Graph& g);

// (delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4). Throws when the
// radicand is negative.
double hong_upper_bound(long long n, long long m, long long delta);

// G* = G - {vs : s in S} + {us : s in S}. Requires S nonempty,
// S subset of N(v) \ N(u), u not in S.
Graph rotate_edges(const Graph& g, int u, int v, const std::vector<int>& moved);

// Adjacency matrix as a flat row-major n*n array.
std::vector<double> adjacency_matrix(const Graph& g);
std::vector<double> laplacian_matrix(const Graph& g);

}  // namespace stp
