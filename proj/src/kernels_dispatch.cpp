#include "rsmm/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace rsmm::kernels {
namespace {

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

void select_backend(Backend b) {
    if (b == Backend::Auto) b = detect();
#if !defined(__x86_64__) && !defined(_M_X64)
    if (b == Backend::Avx2) throw std::invalid_argument("avx2 backend not built on this platform");
#endif
#if !defined(__ARM_NEON) && !defined(__aarch64__)
    if (b == Backend::Neon) throw std::invalid_argument("neon backend not built on this platform");
#endif
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::Avx2 && !__builtin_cpu_supports("avx2"))
        throw std::invalid_argument("cpu does not support avx2");
#endif
    g_backend.store(b);
}

Backend active_backend() { return g_backend.load(); }

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

const KernelTable& active() {
    switch (g_backend.load()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: return avx2_kernels;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        case Backend::Neon: return neon_kernels;
#endif
        default: return scalar_kernels;
    }
}

}  // namespace rsmm::kernels
