#include "rsmm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsmm/kernels.hpp"
#include "rsmm/rng.hpp"

namespace rsmm {
namespace {

void check_finite(const std::vector<double>& data) {
    for (double x : data) {
        if (!std::isfinite(x))
            throw std::invalid_argument("DenseMatrix: non-finite entry");
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("DenseMatrix: zero dimension");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("DenseMatrix: zero dimension");
    if (data_.size() != rows * cols)
        throw std::invalid_argument("DenseMatrix: data length mismatch");
    check_finite(data_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double frobenius_norm(const DenseMatrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

namespace {

// y = Gram * x where Gram = M^T M (by_cols) or M M^T.
void gram_apply(const DenseMatrix& m, bool by_cols, const std::vector<double>& x,
                std::vector<double>& tmp, std::vector<double>& y) {
    const auto& k = kernels::active();
    const std::size_t r = m.rows(), c = m.cols();
    if (by_cols) {
        // tmp = M x (length r), y = M^T tmp (length c)
        for (std::size_t i = 0; i < r; ++i) tmp[i] = k.dot(m.row(i), x.data(), c);
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < r; ++i) k.axpy(y.data(), tmp[i], m.row(i), c);
    } else {
        // tmp = M^T x (length c), y = M tmp (length r)
        std::fill(tmp.begin(), tmp.end(), 0.0);
        for (std::size_t i = 0; i < r; ++i) k.axpy(tmp.data(), x[i], m.row(i), c);
        for (std::size_t i = 0; i < r; ++i) y[i] = k.dot(m.row(i), tmp.data(), c);
    }
}

}  // namespace

double spectral_norm(const DenseMatrix& m, double tol, std::size_t max_iter) {
    if (tol <= 0.0) throw std::invalid_argument("spectral_norm: tol must be positive");
    // Slowly converging spectra (close top eigenvalues of the Gram operator)
    // need far more than O(dim) iterations at tight tolerances.
    if (max_iter == 0) max_iter = 1000 * std::max(m.rows(), m.cols()) + 10000;

    double fro = frobenius_norm(m);
    if (fro == 0.0) return 0.0;

    const bool by_cols = m.cols() <= m.rows();
    const std::size_t n = by_cols ? m.cols() : m.rows();
    const std::size_t other = by_cols ? m.rows() : m.cols();

    rng::Engine eng(0);
    std::vector<double> x(n), tmp(other), y(n);
    for (auto& v : x) v = 2.0 * rng::uniform_open01(eng) - 1.0;

    double gap = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        double nx = 0.0;
        for (double v : x) nx += v * v;
        nx = std::sqrt(nx);
        if (nx == 0.0) {
            // start vector fell in the null space; reseed
            eng.seed(it + 1);
            for (auto& v : x) v = 2.0 * rng::uniform_open01(eng) - 1.0;
            continue;
        }
        for (auto& v : x) v /= nx;
        gram_apply(m, by_cols, x, tmp, y);
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += x[i] * y[i];
        // residual ||Gx - lambda*x||: bounds the eigenvalue error directly
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] - lambda * x[i];
            res += r * r;
        }
        gap = std::sqrt(res);
        if (gap <= tol * std::max(lambda, 1e-300))
            return std::sqrt(std::max(lambda, 0.0));
        x.swap(y);
    }
    throw ConvergenceError(
        "spectral_norm: power iteration did not converge, last gap " +
            std::to_string(gap),
        gap);
}

double stable_rank_k(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("stable_rank_k: column counts differ");
    double fa = frobenius_norm(a), fb = frobenius_norm(b);
    if (fa == 0.0 || fb == 0.0)
        throw std::domain_error("stable_rank_k: zero matrix input");
    double sa = spectral_norm(a), sb = spectral_norm(b);
    return std::max(fa * fa / (sa * sa), fb * fb / (sb * sb));
}

CoherenceReport coherence(const DenseMatrix& q, const DenseMatrix& r) {
    if (q.cols() != r.cols())
        throw std::invalid_argument("coherence: column counts differ");
    const std::size_t m = q.cols();
    CoherenceReport rep;
    rep.q_col_sqnorms.assign(m, 0.0);
    rep.r_col_sqnorms.assign(m, 0.0);
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            rep.q_col_sqnorms[j] += q(i, j) * q(i, j);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            rep.r_col_sqnorms[j] += r(i, j) * r(i, j);
    double mx = 0.0;
    for (double v : rep.q_col_sqnorms) {
        rep.k_a += v;
        mx = std::max(mx, v);
    }
    for (double v : rep.r_col_sqnorms) {
        rep.k_b += v;
        mx = std::max(mx, v);
    }
    rep.mu = static_cast<double>(m) * mx;
    return rep;
}

DenseMatrix matmul_exact(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("matmul_exact: column counts differ");
    const auto& k = kernels::active();
    DenseMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            out(i, j) = k.dot(a.row(i), b.row(j), a.cols());
    return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("subtract: shape mismatch");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

DenseMatrix scaled(const DenseMatrix& a, double c) {
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = c * a.data()[i];
    return out;
}

}  // namespace rsmm
