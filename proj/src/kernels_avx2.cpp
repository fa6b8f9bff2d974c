#if defined(__x86_64__) || defined(_M_X64)

#include "rsmm/kernels.hpp"

#include <immintrin.h>

namespace rsmm::kernels {
namespace {

// One 4-wide block handles the h=1 and h=2 butterfly stages in registers.
inline __m256d butterfly4(__m256d v) {
    // Odd lanes take swap - v so every butterfly is (x+y, x-y) with x the
    // lower-index element.
    __m256d sw1 = _mm256_permute_pd(v, 0b0101);
    __m256d add1 = _mm256_add_pd(v, sw1);
    __m256d sub1 = _mm256_sub_pd(sw1, v);
    v = _mm256_blend_pd(add1, sub1, 0b1010);

    __m256d sw2 = _mm256_permute2f128_pd(v, v, 0x01);
    __m256d add2 = _mm256_add_pd(v, sw2);
    __m256d sub2 = _mm256_sub_pd(sw2, v);
    return _mm256_blend_pd(add2, sub2, 0b1100);
}

void fwht_avx2(double* v, std::size_t len) {
    if (len < 4) {
        scalar_kernels.fwht(v, len);
        return;
    }
    for (std::size_t i = 0; i < len; i += 4) {
        _mm256_storeu_pd(&v[i], butterfly4(_mm256_loadu_pd(&v[i])));
    }
    for (std::size_t h = 4; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; j += 4) {
                __m256d x = _mm256_loadu_pd(&v[j]);
                __m256d y = _mm256_loadu_pd(&v[j + h]);
                _mm256_storeu_pd(&v[j], _mm256_add_pd(x, y));
                _mm256_storeu_pd(&v[j + h], _mm256_sub_pd(x, y));
            }
        }
    }
}

void apply_signs_avx2(double* v, const double* signs, std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d x = _mm256_loadu_pd(&v[i]);
        __m256d s = _mm256_loadu_pd(&signs[i]);
        _mm256_storeu_pd(&v[i], _mm256_mul_pd(x, s));
    }
    for (; i < len; ++i) v[i] *= signs[i];
}

// mul+add, not FMA: results must match the scalar kernel bit for bit.
void axpy_avx2(double* y, double a, const double* x, std::size_t len) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d vy = _mm256_loadu_pd(&y[i]);
        __m256d vx = _mm256_loadu_pd(&x[i]);
        _mm256_storeu_pd(&y[i], _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < len; ++i) y[i] += a * x[i];
}

void scale_avx2(double* v, double a, std::size_t len) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        _mm256_storeu_pd(&v[i], _mm256_mul_pd(_mm256_loadu_pd(&v[i]), va));
    }
    for (; i < len; ++i) v[i] *= a;
}

double dot_avx2(const double* x, const double* y, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(&x[i]),
                                               _mm256_loadu_pd(&y[i])));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < len; ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

const KernelTable avx2_kernels = {
    fwht_avx2, apply_signs_avx2, axpy_avx2, scale_avx2, dot_avx2,
};

}  // namespace rsmm::kernels

#endif
