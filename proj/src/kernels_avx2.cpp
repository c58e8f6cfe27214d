// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma; callers must gate
// on runtime CPU support (see kernels.cpp).

#include "kernels_internal.hpp"

#if defined(STP_HAVE_AVX2)

#include <immintrin.h>

namespace stp::kern {

namespace {

void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d nx = _mm256_fmsub_pd(vc, vx, _mm256_mul_pd(vs, vy));
        __m256d ny = _mm256_fmadd_pd(vs, vx, _mm256_mul_pd(vc, vy));
        _mm256_storeu_pd(x + i, nx);
        _mm256_storeu_pd(y + i, ny);
    }
    for (; i < n; ++i) {
        double xi = x[i], yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void axpy_avx2(double* y, const double* x, std::size_t n, double a) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double norm2sq_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * a[i];
    return r;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{rotate_pair_avx2, axpy_avx2, dot_avx2, norm2sq_avx2};
    return ops;
}

}  // namespace stp::kern

#endif  // STP_HAVE_AVX2
