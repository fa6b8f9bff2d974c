#include "rsmm/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsmm {

double bernstein_tail(double t) {
    if (!(t > 0.0)) throw std::domain_error("bernstein_tail: t must be positive");
    double denom;
    if (t < 1e-4) {
        // e^t - t - 1 = t^2/2 (1 + t/3 + t^2/12 + ...)
        denom = 0.5 * t * t * (1.0 + t / 3.0 + t * t / 12.0);
    } else {
        denom = std::expm1(t) - t;
    }
    return t / denom;
}

BoundResult lemma1_bound(double mu, double t, std::size_t n, double k_a,
                         double k_b) {
    if (mu < 0.0 || t <= 0.0 || n == 0 || k_a <= 0.0 || k_b <= 0.0)
        throw std::domain_error("lemma1_bound: invalid inputs");
    const double nn = static_cast<double>(n);
    BoundResult r;
    r.relative_error_bound =
        std::sqrt(2.0 * (mu + 1.0) * t / nn) + (mu + 1.0) * t / (3.0 * nn);
    r.failure_probability =
        std::min(1.0, 2.0 * std::sqrt(k_a * k_b) * bernstein_tail(t));
    return r;
}

double lemma2_bound(double k_z, std::size_t m, double t) {
    if (k_z <= 0.0 || t <= 0.0 || m == 0)
        throw std::domain_error("lemma2_bound: invalid inputs");
    const double lt = std::log(static_cast<double>(m)) + t;
    return (k_z + 2.0 * std::sqrt(k_z * lt) + 2.0 * lt) / static_cast<double>(m);
}

double coherence_threshold(double k, std::size_t m, double delta) {
    const double big_l = std::log(3.0 * static_cast<double>(m) / delta);
    return k + 2.0 * std::sqrt(k * big_l) + 2.0 * big_l;
}

BoundResult theorem1_bound(double k, std::size_t m, std::size_t n,
                           double delta) {
    if (k < 1.0) throw std::domain_error("theorem1_bound: k must be >= 1");
    if (m == 0 || n == 0) throw std::domain_error("theorem1_bound: m, n must be positive");
    if (!(delta > 0.0 && delta < 1.0 / 3.0))
        throw std::domain_error("theorem1_bound: delta must lie in (0, 1/3)");
    const double big_t = std::log(6.0 * k / delta);
    if (2.0 * big_t < 2.6)
        throw std::domain_error(
            "theorem1_bound: requires 2*ln(6k/delta) >= 2.6");
    const double c = coherence_threshold(k, m, delta) + 1.0;
    const double nn = static_cast<double>(n);
    BoundResult r;
    r.relative_error_bound =
        std::sqrt(4.0 * c * big_t / nn) + 2.0 * c * big_t / (3.0 * nn);
    r.failure_probability = delta;
    return r;
}

std::size_t required_n(double k, std::size_t m, double delta, double eps) {
    if (eps <= 0.0) throw std::domain_error("required_n: eps must be positive");
    const std::size_t cap = std::size_t{1} << 62;
    auto bound = [&](std::size_t n) {
        return theorem1_bound(k, m, n, delta).relative_error_bound;
    };
    std::size_t hi = 1;
    while (bound(hi) > eps) {
        if (hi >= cap)
            throw std::overflow_error("required_n: n exceeds integer range");
        hi *= 2;
    }
    if (hi == 1) return 1;
    std::size_t lo = hi / 2;  // bound(lo) > eps, bound(hi) <= eps
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (bound(mid) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace rsmm
