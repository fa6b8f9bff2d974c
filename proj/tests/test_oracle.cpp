#include <doctest.h>

#include <cmath>

#include "rsmm/generators.hpp"
#include "rsmm/oracle.hpp"
#include "rsmm/rng.hpp"

using namespace rsmm;
using namespace rsmm::oracle;

namespace {

DenseMatrix normalized(DenseMatrix m) {
    return scaled(m, 1.0 / spectral_norm(m, 1e-12));
}

}  // namespace

TEST_CASE("exact_moments single-outcome instance") {
    DenseMatrix one(1, 1, {1.0});
    auto rep = exact_moments(one, one);
    CHECK(rep.m_matrix(0, 0) == 0.0);
    CHECK(rep.m_matrix(0, 1) == 1.0);
    CHECK(rep.m_matrix(1, 0) == 1.0);
    CHECK(rep.ex2(0, 0) == 1.0);
    CHECK(rep.ex2(1, 1) == 1.0);
    CHECK(rep.ex2(0, 1) == 0.0);
    CHECK(rep.max_outcome_dev == doctest::Approx(0.0));
    CHECK(rep.mu == doctest::Approx(1.0));
}

TEST_CASE("exact_moments spread row keeps ex2 norm at mu = 1") {
    const double inv = 1.0 / std::sqrt(2.0);
    DenseMatrix spread(1, 2, {inv, inv});
    auto rep = exact_moments(spread, spread);
    CHECK(rep.mu == doctest::Approx(1.0));
    CHECK(rep.ex2_norm <= 1.0 + 1e-9);
}

TEST_CASE("exact_moments guards") {
    DenseMatrix big(1, 128);
    big(0, 0) = 1.0;
    CHECK_THROWS_AS(exact_moments(big, big), std::domain_error);

    DenseMatrix unnormalized(1, 2, {3.0, 0.0});
    CHECK_THROWS_AS(exact_moments(unnormalized, unnormalized),
                    std::domain_error);
}

TEST_CASE("mean of the m outcomes equals M entrywise") {
    DenseMatrix q = normalized(gen_gaussian(3, 8, 21));
    DenseMatrix r = normalized(gen_gaussian(2, 8, 22));
    auto rep = exact_moments(q, r);
    // E[X] = sum_i (1/m) * m * blockform(q_i r_i^T) = blockform(QR^T) = M
    const std::size_t m = 8, da = 3, db = 2;
    DenseMatrix mean(da + db, da + db);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t b = 0; b < db; ++b) {
                mean(a, da + b) += q(a, i) * r(b, i);
                mean(da + b, a) += q(a, i) * r(b, i);
            }
    for (std::size_t i = 0; i < da + db; ++i)
        for (std::size_t j = 0; j < da + db; ++j)
            CHECK(std::abs(mean(i, j) - rep.m_matrix(i, j)) <= 1e-12);
}

TEST_CASE("m_matrix has block anti-diagonal structure, ex2 block diagonal") {
    DenseMatrix q = normalized(gen_gaussian(2, 4, 31));
    DenseMatrix r = normalized(gen_gaussian(3, 4, 32));
    auto rep = exact_moments(q, r);
    const std::size_t da = 2;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            CHECK(rep.m_matrix(i, j) == 0.0);
            CHECK(rep.ex2(i, da + j) == 0.0);
        }
    // symmetry
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(rep.m_matrix(i, j) == rep.m_matrix(j, i));
            CHECK(rep.ex2(i, j) == doctest::Approx(rep.ex2(j, i)).epsilon(1e-14));
        }
}

TEST_CASE("ex2 top-left block matches independent recomputation") {
    DenseMatrix q = normalized(gen_gaussian(3, 6, 41));
    DenseMatrix r = normalized(gen_gaussian(2, 6, 42));
    auto rep = exact_moments(q, r);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < 6; ++i) {
                double rn = 0.0;
                for (std::size_t x = 0; x < 2; ++x) rn += r(x, i) * r(x, i);
                s += 6.0 * rn * q(a, i) * q(b, i);
            }
            CHECK(rep.ex2(a, b) == doctest::Approx(s).epsilon(1e-12));
        }
}

TEST_CASE("lemma1 inequalities hold on 500 random instances") {
    rng::Engine eng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t m = 1 + rng::uniform_index(eng, 16);
        std::size_t da = 1 + rng::uniform_index(eng, 4);
        std::size_t db = 1 + rng::uniform_index(eng, 4);
        DenseMatrix q = normalized(gen_gaussian(da, m, 1000 + trial));
        DenseMatrix r = normalized(gen_gaussian(db, m, 2000 + trial));
        auto checks = verify_lemma1_inequalities(exact_moments(q, r));
        CHECK(checks.size() == 4);
        for (const auto& c : checks) {
            INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " trial=", trial);
            CHECK(c.holds);
        }
    }
}

TEST_CASE("spiky instance: inequalities hold and ex2 norm is near mu") {
    DenseMatrix spike(1, 8);
    spike(0, 0) = 1.0;  // all mass on one column, spectral norm 1
    auto rep = exact_moments(spike, spike);
    CHECK(rep.mu == doctest::Approx(8.0));
    for (const auto& c : verify_lemma1_inequalities(rep)) CHECK(c.holds);
    CHECK(rep.ex2_norm >= 0.99 * rep.mu);
}

TEST_CASE("enumerate_estimator_mean equals QR^T") {
    DenseMatrix q1(2, 1, {0.6, -0.8});
    auto exact1 = matmul_exact(q1, q1);
    auto mean1 = enumerate_estimator_mean(q1, q1, 5);
    for (std::size_t p = 0; p < 4; ++p)
        CHECK(mean1.data()[p] == doctest::Approx(exact1.data()[p]).epsilon(1e-14));

    DenseMatrix q = normalized(gen_gaussian(3, 4, 51));
    DenseMatrix r = normalized(gen_gaussian(2, 4, 52));
    auto mean = enumerate_estimator_mean(q, r, 3);  // 64 tuples
    auto exact = matmul_exact(q, r);
    for (std::size_t p = 0; p < mean.data().size(); ++p)
        CHECK(std::abs(mean.data()[p] - exact.data()[p]) <= 1e-12);

    // guard: m^n too large
    DenseMatrix wide = normalized(gen_gaussian(2, 32, 53));
    CHECK_THROWS_AS(enumerate_estimator_mean(wide, wide, 5), std::domain_error);
}
