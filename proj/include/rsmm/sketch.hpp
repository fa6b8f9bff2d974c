#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsmm/matrix.hpp"
#include "rsmm/rotate.hpp"

namespace rsmm {

// Splits the user seed into independent rotation and sampling streams.
inline constexpr std::uint64_t kSampleSeedSalt = 0x9e3779b97f4a7c15ull;

struct SketchPlan {
    RotationSpec rotation;
    std::size_t n;
    std::vector<std::size_t> indices;  // in [0, m_padded), with replacement
    std::uint64_t sample_seed;
};

// n indices i.i.d. uniform on {0, ..., m_padded-1}.
SketchPlan draw_plan(const RotationSpec& rotation, std::size_t n,
                     std::uint64_t sample_seed);

// (m_padded/n) * sum of outer products of the sampled column pairs.
DenseMatrix sample_product(const DenseMatrix& a_rot, const DenseMatrix& b_rot,
                           const SketchPlan& plan);

// Full pipeline: rotate both inputs, draw a plan, accumulate the estimator.
std::pair<DenseMatrix, SketchPlan> approx_matmul(const DenseMatrix& a,
                                                 const DenseMatrix& b,
                                                 std::size_t n,
                                                 std::uint64_t seed);

}  // namespace rsmm
