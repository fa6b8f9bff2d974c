#if defined(__ARM_NEON) || defined(__aarch64__)

#include "rsmm/kernels.hpp"

#include <arm_neon.h>

namespace rsmm::kernels {
namespace {

void fwht_neon(double* v, std::size_t len) {
    if (len < 2) return;
    // h = 1 stage, pairwise in registers
    for (std::size_t i = 0; i < len; i += 2) {
        float64x2_t p = vld1q_f64(&v[i]);
        float64x2_t sw = vextq_f64(p, p, 1);
        float64x2_t add = vaddq_f64(p, sw);
        float64x2_t sub = vsubq_f64(p, sw);
        vst1q_f64(&v[i], vcopyq_laneq_f64(add, 1, sub, 0));
    }
    for (std::size_t h = 2; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; j += 2) {
                float64x2_t x = vld1q_f64(&v[j]);
                float64x2_t y = vld1q_f64(&v[j + h]);
                vst1q_f64(&v[j], vaddq_f64(x, y));
                vst1q_f64(&v[j + h], vsubq_f64(x, y));
            }
        }
    }
}

void apply_signs_neon(double* v, const double* signs, std::size_t len) {
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        vst1q_f64(&v[i], vmulq_f64(vld1q_f64(&v[i]), vld1q_f64(&signs[i])));
    }
    for (; i < len; ++i) v[i] *= signs[i];
}

void axpy_neon(double* y, double a, const double* x, std::size_t len) {
    float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t vy = vld1q_f64(&y[i]);
        float64x2_t vx = vld1q_f64(&x[i]);
        vst1q_f64(&y[i], vaddq_f64(vy, vmulq_f64(va, vx)));
    }
    for (; i < len; ++i) y[i] += a * x[i];
}

void scale_neon(double* v, double a, std::size_t len) {
    float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        vst1q_f64(&v[i], vmulq_f64(vld1q_f64(&v[i]), va));
    }
    for (; i < len; ++i) v[i] *= a;
}

double dot_neon(const double* x, const double* y, std::size_t len) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(&x[i]), vld1q_f64(&y[i])));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < len; ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

const KernelTable neon_kernels = {
    fwht_neon, apply_signs_neon, axpy_neon, scale_neon, dot_neon,
};

}  // namespace rsmm::kernels

#endif
