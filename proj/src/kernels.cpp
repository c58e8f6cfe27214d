#include "stp/kernels.hpp"

#include "kernels_internal.hpp"
#include "stp/graph.hpp"

namespace stp::kern {

namespace {

void rotate_pair_scalar(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        double xi = x[i], yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void axpy_scalar(double* y, const double* x, std::size_t n, double a) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double norm2sq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

const Ops kScalar{rotate_pair_scalar, axpy_scalar, dot_scalar, norm2sq_scalar};

struct State {
    const Ops* active;
    const char* name;
};

State detect() {
#if defined(STP_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return {&avx2_ops(), "avx2"};
#endif
#if defined(STP_HAVE_NEON)
    return {&neon_ops(), "neon"};
#endif
    return {&kScalar, "scalar"};
}

State& state() {
    static State s = detect();
    return s;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops& ops() { return *state().active; }

const char* active_name() { return state().name; }

bool available(Backend b) {
    switch (b) {
        case Backend::Auto:
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(STP_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(STP_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

void select(Backend b) {
    if (!available(b)) throw Error("kernel backend not available on this machine");
    switch (b) {
        case Backend::Auto:
            state() = detect();
            break;
        case Backend::Scalar:
            state() = {&kScalar, "scalar"};
            break;
        case Backend::Avx2:
#if defined(STP_HAVE_AVX2)
            state() = {&avx2_ops(), "avx2"};
#endif
            break;
        case Backend::Neon:
#if defined(STP_HAVE_NEON)
            state() = {&neon_ops(), "neon"};
#endif
            break;
    }
}

}  // namespace stp::kern
