#include "rsmm/kernels.hpp"

namespace rsmm::kernels {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void fwht_scalar(double* v, std::size_t len) {
    for (std::size_t h = 1; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                double x = v[j];
                double y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

void apply_signs_scalar(double* v, const double* signs, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) v[i] *= signs[i];
}

void axpy_scalar(double* y, double a, const double* x, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] += a * x[i];
}

void scale_scalar(double* v, double a, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) v[i] *= a;
}

double dot_scalar(const double* x, const double* y, std::size_t len) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

const KernelTable scalar_kernels = {
    fwht_scalar, apply_signs_scalar, axpy_scalar, scale_scalar, dot_scalar,
};

}  // namespace rsmm::kernels
