#pragma once

#include <cstddef>

namespace stp::kern {

// Dense inner-loop kernels behind the eigensolver. Scalar reference
// implementations always exist; vector variants are selected once at
// startup from runtime CPU detection and must agree with the reference
// within floating-point reassociation error (see tests/test_kernels).
struct Ops {
    // Plane rotation applied in place to two rows:
    //   x[i] <- c*x[i] - s*y[i],  y[i] <- s*x[i] + c*y[i]
    void (*rotate_pair)(double* x, double* y, std::size_t n, double c, double s);
    // y[i] += a * x[i]
    void (*axpy)(double* y, const double* x, std::size_t n, double a);
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*norm2sq)(const double* a, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2, Neon };

const Ops& scalar_ops();

// Active kernel table. Defaults to the best backend the CPU supports.
const Ops& ops();

// Forces a backend (tests, benchmarking). Throws stp::Error if the
// requested backend is unavailable on this machine.
void select(Backend b);

// Name of the backend currently in use: "scalar", "avx2" or "neon".
const char* active_name();

// True if the named backend was compiled in and the CPU supports it.
bool available(Backend b);

}  // namespace stp::kern
