#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops used by the rotation and the sketch accumulator.
// Scalar kernels are the reference; SIMD variants must produce bit-identical
// results for the elementwise ops (fwht, signs, axpy use no reassociation and
// no FMA contraction). dot is a reduction and is only guaranteed to agree
// with the scalar kernel to ~1e-13 relative.
namespace rsmm::kernels {

enum class Backend { Auto, Scalar, Avx2, Neon };

struct KernelTable {
    // In-place unnormalized Walsh-Hadamard transform; len is a power of two.
    void (*fwht)(double* v, std::size_t len);
    // v[i] *= signs[i]
    void (*apply_signs)(double* v, const double* signs, std::size_t len);
    // y[i] += a * x[i]
    void (*axpy)(double* y, double a, const double* x, std::size_t len);
    // v[i] *= a
    void (*scale)(double* v, double a, std::size_t len);
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t len);
};

extern const KernelTable scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_kernels;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
extern const KernelTable neon_kernels;
#endif

// Runtime selection. Auto picks the widest backend the CPU supports.
void select_backend(Backend b);
Backend active_backend();
std::string backend_name(Backend b);
const KernelTable& active();

bool is_power_of_two(std::size_t n);

}  // namespace rsmm::kernels
