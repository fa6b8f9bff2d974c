#pragma once

#include <cstddef>

namespace rsmm {

struct BoundResult {
    double relative_error_bound;
    double failure_probability;
};

// t / (e^t - t - 1), series-evaluated near zero to avoid cancellation.
double bernstein_tail(double t);

// Error bound sqrt(2(mu+1)t/n) + (mu+1)t/(3n) with failure probability
// min(1, 2*sqrt(k_a*k_b)*bernstein_tail(t)).
BoundResult lemma1_bound(double mu, double t, std::size_t n, double k_a,
                         double k_b);

// (k_z + 2*sqrt(k_z*(ln m + t)) + 2*(ln m + t)) / m, the max-column-sqnorm
// threshold exceeded with probability <= e^{-t}.
double lemma2_bound(double k_z, std::size_t m, double t);

// Relative spectral-error bound holding with probability >= 1 - delta.
BoundResult theorem1_bound(double k, std::size_t m, std::size_t n,
                           double delta);

// Coherence threshold used inside theorem1_bound:
// k + 2*sqrt(k*ln(3m/delta)) + 2*ln(3m/delta).
double coherence_threshold(double k, std::size_t m, double delta);

// Smallest n with theorem1_bound(k, m, n, delta) <= eps.
std::size_t required_n(double k, std::size_t m, double delta, double eps);

}  // namespace rsmm
