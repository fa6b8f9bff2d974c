#include "rsmm/oracle.hpp"

#include <cmath>

namespace rsmm::oracle {
namespace {

// Spectral norms here use a cyclic Jacobi eigensolver on the (tiny,
// symmetric) matrices: immune to the degenerate spectra that stall power
// iteration, and independent of the library's norm path.
double sym_max_abs_eig(DenseMatrix a) {
    const std::size_t n = a.rows();
    if (n == 1) return std::abs(a(0, 0));
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                off = std::max(off, std::abs(apq));
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
            }
        }
        if (off < 1e-15) break;
    }
    double mx = 0.0;
    for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, std::abs(a(i, i)));
    return mx;
}

// Spectral norm via the Gram matrix, so non-symmetric Q and R work too.
double tiny_spectral_norm(const DenseMatrix& m) {
    const bool by_rows = m.rows() <= m.cols();
    const DenseMatrix gram =
        by_rows ? matmul_exact(m, m)
                : [&] {
                      DenseMatrix t(m.cols(), m.rows());
                      for (std::size_t i = 0; i < m.rows(); ++i)
                          for (std::size_t j = 0; j < m.cols(); ++j)
                              t(j, i) = m(i, j);
                      return matmul_exact(t, t);
                  }();
    return std::sqrt(std::max(0.0, sym_max_abs_eig(gram)));
}

// [[0, T], [T^T, 0]] for T = QR^T scaled by c.
DenseMatrix block_antidiag(const DenseMatrix& t, double c) {
    const std::size_t da = t.rows(), db = t.cols();
    DenseMatrix out(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            out(i, da + j) = c * t(i, j);
            out(da + j, i) = c * t(i, j);
        }
    return out;
}

}  // namespace

MomentReport exact_moments(const DenseMatrix& q, const DenseMatrix& r) {
    if (q.cols() != r.cols())
        throw std::invalid_argument("exact_moments: column counts differ");
    const std::size_t m = q.cols();
    if (m > 64) throw std::domain_error("exact_moments: m exceeds 64");
    if (tiny_spectral_norm(q) > 1.0 + 1e-9 ||
        tiny_spectral_norm(r) > 1.0 + 1e-9)
        throw std::domain_error(
            "exact_moments: inputs must be spectral-norm-normalized");

    const std::size_t da = q.rows(), db = r.rows();
    const CoherenceReport coh = coherence(q, r);

    const DenseMatrix qrt = matmul_exact(q, r);
    DenseMatrix m_matrix = block_antidiag(qrt, 1.0);

    DenseMatrix ex2(da + db, da + db);
    for (std::size_t i = 0; i < m; ++i) {
        const double qn = coh.q_col_sqnorms[i], rn = coh.r_col_sqnorms[i];
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t b = 0; b < da; ++b)
                ex2(a, b) += m * rn * q(a, i) * q(b, i);
        for (std::size_t a = 0; a < db; ++a)
            for (std::size_t b = 0; b < db; ++b)
                ex2(da + a, da + b) += m * qn * r(a, i) * r(b, i);
    }

    double max_dev = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        DenseMatrix outer(da, db);
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t b = 0; b < db; ++b)
                outer(a, b) = q(a, i) * r(b, i);
        DenseMatrix xi = block_antidiag(outer, static_cast<double>(m));
        max_dev = std::max(max_dev,
                           tiny_spectral_norm(subtract(xi, m_matrix)));
    }

    double trace = 0.0;
    for (std::size_t i = 0; i < da + db; ++i) trace += ex2(i, i);

    MomentReport rep{m_matrix,
                     ex2,
                     coh.mu,
                     coh.k_a,
                     coh.k_b,
                     max_dev,
                     tiny_spectral_norm(ex2),
                     trace};
    return rep;
}

std::vector<InequalityCheck> verify_lemma1_inequalities(
    const MomentReport& report) {
    constexpr double slack = 1e-9;
    std::vector<InequalityCheck> checks;
    auto add = [&](std::string name, double lhs, double rhs) {
        checks.push_back({std::move(name), lhs, rhs, lhs <= rhs + slack});
    };

    add("trace(E[X^2]) <= 2*mu*sqrt(kA*kB)", report.ex2_trace,
        2.0 * report.mu * std::sqrt(report.k_a * report.k_b));
    add("||E[X^2]|| <= mu", report.ex2_norm, report.mu);

    // E[(X-M)^2] = E[X^2] - M^2; M is symmetric so M^2 = M M^T.
    DenseMatrix m_sq = matmul_exact(report.m_matrix, report.m_matrix);
    double centered = tiny_spectral_norm(subtract(report.ex2, m_sq));
    add("||E[(X-M)^2]|| <= mu + 1", centered, report.mu + 1.0);
    add("max_i ||X_i - M|| <= mu + 1", report.max_outcome_dev, report.mu + 1.0);
    return checks;
}

DenseMatrix enumerate_estimator_mean(const DenseMatrix& q,
                                     const DenseMatrix& r, std::size_t n) {
    if (q.cols() != r.cols())
        throw std::invalid_argument("enumerate_estimator_mean: column counts differ");
    if (n == 0)
        throw std::invalid_argument("enumerate_estimator_mean: n must be positive");
    const std::size_t m = q.cols();
    double tuples_d = std::pow(static_cast<double>(m), static_cast<double>(n));
    if (tuples_d > 1e6)
        throw std::domain_error("enumerate_estimator_mean: m^n exceeds 1e6");
    const std::size_t tuples = static_cast<std::size_t>(tuples_d + 0.5);

    const std::size_t da = q.rows(), db = r.rows();
    DenseMatrix sum(da, db);
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
        // estimate for this tuple: (m/n) * sum_j q_{i_j} r_{i_j}^T
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t c = idx[j];
            const double w = static_cast<double>(m) / static_cast<double>(n);
            for (std::size_t a = 0; a < da; ++a)
                for (std::size_t b = 0; b < db; ++b)
                    sum(a, b) += w * q(a, c) * r(b, c);
        }
        // odometer increment
        for (std::size_t j = 0; j < n; ++j) {
            if (++idx[j] < m) break;
            idx[j] = 0;
        }
    }
    return scaled(sum, 1.0 / static_cast<double>(tuples));
}

}  // namespace rsmm::oracle
