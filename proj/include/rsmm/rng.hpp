#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Seeded randomness helpers. std::mt19937_64's output sequence is fixed by
// the standard; the distributions here are hand-rolled because the standard
// library distribution objects are implementation-defined and would break
// cross-platform reproducibility of seeded experiments.
namespace rsmm::rng {

using Engine = std::mt19937_64;

// +1 or -1, one engine draw per sign.
inline int rademacher(Engine& eng) { return (eng() & 1u) ? 1 : -1; }

// Uniform on {0, ..., bound-1} by rejection, bias-free.
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % bound;
}

// Uniform on (0, 1), 53-bit resolution, never exactly 0.
inline double uniform_open01(Engine& eng) {
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal via Box-Muller; two engine draws per variate.
inline double standard_normal(Engine& eng) {
    double u = uniform_open01(eng);
    double v = uniform_open01(eng);
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * 3.14159265358979323846 * v);
}

}  // namespace rsmm::rng
