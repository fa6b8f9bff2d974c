#pragma once

#include <string>
#include <vector>

#include "rsmm/matrix.hpp"

namespace rsmm::oracle {

// Exact distributional objects of the sampled-column estimator on a small,
// spectral-norm-normalized instance, computed by direct summation over the
// m equally likely outcomes.
struct MomentReport {
    DenseMatrix m_matrix;       // block [[0, QR^T], [RQ^T, 0]]
    DenseMatrix ex2;            // E[X^2], block diagonal
    double mu;
    double k_a;
    double k_b;
    double max_outcome_dev;     // max_i ||X_i - M||
    double ex2_norm;            // ||E[X^2]||
    double ex2_trace;
};

struct InequalityCheck {
    std::string name;
    double lhs;
    double rhs;
    bool holds;
};

// Guards: m <= 64, spectral norms of Q and R <= 1 + 1e-9.
MomentReport exact_moments(const DenseMatrix& q, const DenseMatrix& r);

// The four moment inequalities behind the sampling tail bound, each with a
// 1e-9 absolute slack.
std::vector<InequalityCheck> verify_lemma1_inequalities(
    const MomentReport& report);

// Exact average of the estimator over all m^n index tuples; equals QR^T.
// Guard: m^n <= 1e6.
DenseMatrix enumerate_estimator_mean(const DenseMatrix& q,
                                     const DenseMatrix& r, std::size_t n);

}  // namespace rsmm::oracle
