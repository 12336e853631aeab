// Compiled with -mavx2 (and without -mfma, so elementwise results match the
// scalar reference bit for bit).
#include <immintrin.h>

#include <cmath>

#include "egocs/kernels.hpp"

namespace egocs::kernels {

namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double *a, const double *b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_abs_avx2(const double *a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i + 4)));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i)));
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double gather_sum_avx2(const double *x, const std::uint32_t *idx, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i *>(idx + i));
        const __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i *>(idx + i + 4));
        acc0 = _mm256_add_pd(acc0, _mm256_i32gather_pd(x, lo, 8));
        acc1 = _mm256_add_pd(acc1, _mm256_i32gather_pd(x, hi, 8));
    }
    for (; i + 4 <= n; i += 4) {
        const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i *>(idx + i));
        acc0 = _mm256_add_pd(acc0, _mm256_i32gather_pd(x, lo, 8));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[idx[i]];
    return s;
}

void sub_avx2(const double *a, const double *b, double *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void prox_gradient_step_avx2(const double *z, const double *grad, double step, double threshold, bool nonneg,
                             double *out, std::size_t n) {
    const __m256d vstep = _mm256_set1_pd(step);
    const __m256d vthr = _mm256_set1_pd(threshold);
    const __m256d vneg_thr = _mm256_set1_pd(-threshold);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    if (nonneg) {
        for (; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(z + i), _mm256_mul_pd(vstep, _mm256_loadu_pd(grad + i)));
            const __m256d d = _mm256_sub_pd(v, vthr);
            _mm256_storeu_pd(out + i, _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_GT_OQ), d));
        }
        for (; i < n; ++i) {
            const double d = (z[i] - step * grad[i]) - threshold;
            out[i] = d > 0.0 ? d : 0.0;
        }
        return;
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(z + i), _mm256_mul_pd(vstep, _mm256_loadu_pd(grad + i)));
        const __m256d above = _mm256_and_pd(_mm256_cmp_pd(v, vthr, _CMP_GT_OQ), _mm256_sub_pd(v, vthr));
        const __m256d below = _mm256_and_pd(_mm256_cmp_pd(v, vneg_thr, _CMP_LT_OQ), _mm256_add_pd(v, vthr));
        _mm256_storeu_pd(out + i, _mm256_or_pd(above, below));
    }
    for (; i < n; ++i) {
        const double v = z[i] - step * grad[i];
        out[i] = v > threshold ? v - threshold : (v < -threshold ? v + threshold : 0.0);
    }
}

void extrapolate_avx2(const double *x, const double *x_prev, double beta, double *out, std::size_t n) {
    const __m256d vbeta = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d diff = _mm256_sub_pd(xv, _mm256_loadu_pd(x_prev + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(xv, _mm256_mul_pd(vbeta, diff)));
    }
    for (; i < n; ++i) out[i] = x[i] + beta * (x[i] - x_prev[i]);
}

constexpr Table kAvx2{
    Isa::avx2, dot_avx2, sum_abs_avx2, gather_sum_avx2, sub_avx2, prox_gradient_step_avx2, extrapolate_avx2,
};

} // namespace

namespace detail {
const Table *avx2_table_impl() noexcept { return &kAvx2; }
} // namespace detail

} // namespace egocs::kernels
