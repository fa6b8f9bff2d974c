#pragma once

#include <cstdint>
#include <string>

#include "rsmm/matrix.hpp"

namespace rsmm {

// Seeded test-matrix generators covering the coherence extremes:
//   gaussian   — i.i.d. standard normal entries
//   low-rank   — product of two thin gaussian factors (rank columns)
//   spiky      — first `rank` columns gaussian, the rest zero
//   coordinate — rows of the identity
DenseMatrix gen_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed);
DenseMatrix gen_low_rank(std::size_t rows, std::size_t cols, std::size_t rank,
                         std::uint64_t seed);
DenseMatrix gen_spiky(std::size_t rows, std::size_t cols, std::size_t rank,
                      std::uint64_t seed);
DenseMatrix gen_coordinate(std::size_t rows, std::size_t cols);

// Dispatch by name; unknown name throws std::invalid_argument.
DenseMatrix generate(const std::string& name, std::size_t rows,
                     std::size_t cols, std::size_t rank, std::uint64_t seed);

}  // namespace rsmm
