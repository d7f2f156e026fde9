// Compiled with -mavx2 -mfma; only called after a run-time CPU check.

#include "wgqed/kernels.hpp"

#include <immintrin.h>

namespace wgqed::kernels {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

std::complex<double> weighted_trace_sum_avx2(const double* rho, const double* y, const double* w, std::size_t k,
                                             std::size_t count) {
    __m256d yr[4], yi[4];
    for (int q = 0; q < 4; ++q) {
        yr[q] = _mm256_loadu_pd(y + 4 * q);
        yi[q] = _mm256_loadu_pd(y + 16 + 4 * q);
    }
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    for (std::size_t j = 0; j < count; ++j) {
        const double* rr = rho + j * kBlock;
        __m256d tr = _mm256_setzero_pd();
        __m256d ti = _mm256_setzero_pd();
        for (int q = 0; q < 4; ++q) {
            const __m256d a = _mm256_loadu_pd(rr + 4 * q);
            const __m256d b = _mm256_loadu_pd(rr + 16 + 4 * q);
            tr = _mm256_fmadd_pd(a, yr[q], tr);
            tr = _mm256_fnmadd_pd(b, yi[q], tr);
            ti = _mm256_fmadd_pd(a, yi[q], ti);
            ti = _mm256_fmadd_pd(b, yr[q], ti);
        }
        const __m256d wj = _mm256_set1_pd(w[j] * w[j + k]);
        acc_r = _mm256_fmadd_pd(wj, tr, acc_r);
        acc_i = _mm256_fmadd_pd(wj, ti, acc_i);
    }
    return {hsum(acc_r), hsum(acc_i)};
}

}  // namespace wgqed::kernels
