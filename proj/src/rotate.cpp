#include "rsmm/rotate.hpp"

#include <cmath>
#include <cstring>

#include "rsmm/kernels.hpp"
#include "rsmm/rng.hpp"

namespace rsmm {

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p *= 2;
    return p;
}

void fwht_in_place(double* v, std::size_t len) {
    if (!kernels::is_power_of_two(len))
        throw std::invalid_argument("fwht_in_place: length is not a power of two");
    kernels::active().fwht(v, len);
}

void fwht_in_place(std::vector<double>& v) { fwht_in_place(v.data(), v.size()); }

RotationSpec make_rotation(std::size_t m, std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("make_rotation: m must be positive");
    RotationSpec spec;
    spec.m_original = m;
    spec.m_padded = next_power_of_two(m);
    spec.seed = seed;
    spec.signs.resize(spec.m_padded);
    rng::Engine eng(seed);
    for (auto& s : spec.signs) s = static_cast<double>(rng::rademacher(eng));
    return spec;
}

DenseMatrix apply_rotation(const DenseMatrix& a, const RotationSpec& spec) {
    if (a.cols() != spec.m_original)
        throw std::invalid_argument("apply_rotation: column count mismatch");
    const auto& k = kernels::active();
    const std::size_t mp = spec.m_padded;
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(mp));

    DenseMatrix out(a.rows(), mp);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* row = out.row(i);
        std::memcpy(row, a.row(i), a.cols() * sizeof(double));
        k.apply_signs(row, spec.signs.data(), a.cols());  // padding is zero
        k.fwht(row, mp);
        k.scale(row, inv_sqrt_m, mp);
    }
    return out;
}

DenseMatrix materialize_theta(const RotationSpec& spec) {
    if (spec.m_padded > 4096)
        throw std::domain_error("materialize_theta: m_padded exceeds 4096");
    // Rotating the identity yields Theta itself: row i of (1/sqrt(m))DH is
    // sign_i/sqrt(m) times row i of H, and H is symmetric.
    DenseMatrix eye = DenseMatrix::identity(spec.m_padded);
    RotationSpec full = spec;
    full.m_original = spec.m_padded;
    return apply_rotation(eye, full);
}

}  // namespace rsmm
