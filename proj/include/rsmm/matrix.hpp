#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rsmm {

// Row-major dense real matrix. Immutable once built (operations return new
// matrices); constructors reject non-finite entries.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }

    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    static DenseMatrix identity(std::size_t n);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

struct CoherenceReport {
    double mu = 0.0;
    double k_a = 0.0;
    double k_b = 0.0;
    std::vector<double> q_col_sqnorms;
    std::vector<double> r_col_sqnorms;
};

// Thrown when power iteration fails to reach tol within max_iter.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double gap)
        : std::runtime_error(what), last_gap(gap) {}
    double last_gap;
};

double frobenius_norm(const DenseMatrix& m);

// Largest singular value by power iteration on the smaller Gram operator.
double spectral_norm(const DenseMatrix& m, double tol = 1e-10,
                     std::size_t max_iter = 0);

// max(||A||_F^2/||A||^2, ||B||_F^2/||B||^2); requires both nonzero.
double stable_rank_k(const DenseMatrix& a, const DenseMatrix& b);

// Per-column squared norms of Q and R, mu = cols * max of all of them.
CoherenceReport coherence(const DenseMatrix& q, const DenseMatrix& r);

// A * B^T; A and B must share their column count.
DenseMatrix matmul_exact(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double c);

}  // namespace rsmm
