// NEON kernel variants for aarch64. Baseline on that target, so no runtime
// gate is needed.

#include "kernels_internal.hpp"

#if defined(STP_HAVE_NEON)

#include <arm_neon.h>

namespace stp::kern {

namespace {

void rotate_pair_neon(double* x, double* y, std::size_t n, double c, double s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vx = vld1q_f64(x + i);
        float64x2_t vy = vld1q_f64(y + i);
        float64x2_t nx = vfmsq_f64(vmulq_f64(vc, vx), vs, vy);
        float64x2_t ny = vfmaq_f64(vmulq_f64(vc, vy), vs, vx);
        vst1q_f64(x + i, nx);
        vst1q_f64(y + i, ny);
    }
    for (; i < n; ++i) {
        double xi = x[i], yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void axpy_neon(double* y, const double* x, std::size_t n, double a) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double norm2sq_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(a + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double r = vaddvq_f64(acc);
    for (; i < n; ++i) r += a[i] * a[i];
    return r;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{rotate_pair_neon, axpy_neon, dot_neon, norm2sq_neon};
    return ops;
}

}  // namespace stp::kern

#endif  // STP_HAVE_NEON
