#include "rsmm/sketch.hpp"

#include "rsmm/kernels.hpp"
#include "rsmm/rng.hpp"

namespace rsmm {

SketchPlan draw_plan(const RotationSpec& rotation, std::size_t n,
                     std::uint64_t sample_seed) {
    if (n == 0) throw std::invalid_argument("draw_plan: n must be positive");
    SketchPlan plan;
    plan.rotation = rotation;
    plan.n = n;
    plan.sample_seed = sample_seed;
    plan.indices.resize(n);
    rng::Engine eng(sample_seed);
    for (auto& idx : plan.indices)
        idx = static_cast<std::size_t>(rng::uniform_index(eng, rotation.m_padded));
    return plan;
}

DenseMatrix sample_product(const DenseMatrix& a_rot, const DenseMatrix& b_rot,
                           const SketchPlan& plan) {
    const std::size_t mp = plan.rotation.m_padded;
    if (a_rot.cols() != mp || b_rot.cols() != mp)
        throw std::invalid_argument("sample_product: column count mismatch");
    for (std::size_t idx : plan.indices)
        if (idx >= mp) throw std::invalid_argument("sample_product: index out of range");

    const auto& k = kernels::active();
    const std::size_t da = a_rot.rows(), db = b_rot.rows();
    DenseMatrix out(da, db);

    // Gather the sampled column of B once per draw, then rank-1 update.
    std::vector<double> b_col(db);
    for (std::size_t idx : plan.indices) {
        for (std::size_t j = 0; j < db; ++j) b_col[j] = b_rot(j, idx);
        for (std::size_t i = 0; i < da; ++i)
            k.axpy(out.row(i), a_rot(i, idx), b_col.data(), db);
    }
    const double scale = static_cast<double>(mp) / static_cast<double>(plan.n);
    for (std::size_t i = 0; i < da; ++i) k.scale(out.row(i), scale, db);
    return out;
}

std::pair<DenseMatrix, SketchPlan> approx_matmul(const DenseMatrix& a,
                                                 const DenseMatrix& b,
                                                 std::size_t n,
                                                 std::uint64_t seed) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("approx_matmul: column counts differ");
    RotationSpec rot = make_rotation(a.cols(), seed);
    DenseMatrix a_rot = apply_rotation(a, rot);
    DenseMatrix b_rot = apply_rotation(b, rot);
    SketchPlan plan = draw_plan(rot, n, seed ^ kSampleSeedSalt);
    return {sample_product(a_rot, b_rot, plan), std::move(plan)};
}

}  // namespace rsmm
