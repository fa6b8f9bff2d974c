#pragma once

#include <cstdint>
#include <vector>

#include "rsmm/matrix.hpp"

namespace rsmm {

// One realized random rotation Theta = (1/sqrt(m_padded)) * diag(signs) * H,
// where H is the Sylvester Hadamard matrix of order m_padded.
struct RotationSpec {
    std::size_t m_original;
    std::size_t m_padded;
    std::vector<double> signs;  // +1.0 / -1.0, length m_padded
    std::uint64_t seed;
};

std::size_t next_power_of_two(std::size_t n);

// In-place unnormalized H*v; v.size() must be a power of two.
void fwht_in_place(std::vector<double>& v);
void fwht_in_place(double* v, std::size_t len);

// Rademacher signs drawn from the seed; m padded to the next power of two.
RotationSpec make_rotation(std::size_t m, std::uint64_t seed);

// A (zero-padded to m_padded columns) times Theta. Rows are independent:
// sign-flip, butterfly, scale by 1/sqrt(m_padded).
DenseMatrix apply_rotation(const DenseMatrix& a, const RotationSpec& spec);

// Explicit m_padded x m_padded Theta, for orthogonality checks. Guarded to
// m_padded <= 4096.
DenseMatrix materialize_theta(const RotationSpec& spec);

}  // namespace rsmm
