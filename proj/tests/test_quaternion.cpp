#include "qlct/quaternion.hpp"

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qlct;

namespace {
const UnitPureImaginary MU = UnitPureImaginary::i_axis();
const UnitPureImaginary NU = UnitPureImaginary::j_axis();
}  // namespace

TEST_CASE("hamilton rules") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == Quaternion::real(-1));
    CHECK(j * j == Quaternion::real(-1));
    CHECK(k * k == Quaternion::real(-1));
    CHECK(i * j * k == Quaternion::real(-1));

    const Quaternion q{1, 2, 3, 4};
    CHECK(q * Quaternion::real(1) == q);

    // (1+i)(1+j) = 1 + i + j + k by distributivity
    const Quaternion p{1, 1, 0, 0}, r{1, 0, 1, 0};
    CHECK(p * r == Quaternion{1, 1, 1, 1});
}

TEST_CASE("conjugate and modulus") {
    const Quaternion q{1, 2, 3, 4};
    CHECK(conjugate(q) == Quaternion{1, -2, -3, -4});
    CHECK(conjugate(conjugate(q)) == q);
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0};
    CHECK(conjugate(i * j) == Quaternion{0, 0, 0, -1});

    CHECK(modulus(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
    CHECK(modulus(Quaternion{}) == 0.0);
    CHECK(modulus(Quaternion{3, 4, 0, 0}) == doctest::Approx(5.0));

    // |q|^2 equals q conj(q) as a real scalar
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const Quaternion p = testsupport::random_quat(rng);
        const Quaternion qc = p * conjugate(p);
        CHECK(qc.w == doctest::Approx(norm_sq(p)).epsilon(1e-12));
        CHECK(modulus(qc - Quaternion::real(norm_sq(p))) < 1e-12 * norm_sq(p));
    }
}

TEST_CASE("modulus is multiplicative; conjugation reverses products") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = testsupport::random_quat(rng), q = testsupport::random_quat(rng);
        CHECK(modulus(p * q) == doctest::Approx(modulus(p) * modulus(q)).epsilon(1e-12));
        CHECK(modulus(conjugate(p * q) - conjugate(q) * conjugate(p)) < 1e-12);
    }
}

TEST_CASE("quat_inverse") {
    CHECK(quat_inverse({0, 1, 0, 0}) == Quaternion{0, -1, 0, 0});
    CHECK(quat_inverse(Quaternion::real(2)) == Quaternion::real(0.5));
    CHECK(quat_inverse({1, 1, 0, 0}) == Quaternion{0.5, -0.5, 0, 0});
    CHECK_THROWS_AS(quat_inverse({0, 0, 0, 0}), DivisionByZeroQuaternion);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = testsupport::random_quat(rng);
        CHECK(modulus(q * quat_inverse(q) - Quaternion::real(1)) < 1e-12);
    }
}

TEST_CASE("unit pure imaginary validation") {
    CHECK_THROWS_AS(UnitPureImaginary({0.5, 1, 0, 0}), NonOrthogonalAxes);
    CHECK_THROWS_AS(UnitPureImaginary({0, 0.5, 0, 0}), NonOrthogonalAxes);
    const UnitPureImaginary ax({0, 0.6, 0.8, 0});
    CHECK(modulus(ax.q() * ax.q() + Quaternion::real(1)) < 1e-12);
}

TEST_CASE("split_nu named cases") {
    // q = 1 + 2 mu stays in the first component
    auto [fa, fb] = split_nu({1, 2, 0, 0}, MU, NU);
    CHECK(fa.re == 1.0);
    CHECK(fa.im == 2.0);
    CHECK(fb.re == 0.0);
    CHECK(fb.im == 0.0);

    // q = nu -> (0, 1)
    auto [ga, gb] = split_nu({0, 0, 1, 0}, MU, NU);
    CHECK(ga.c() == std::complex<double>(0, 0));
    CHECK(gb.c() == std::complex<double>(1, 0));

    // q = eta = mu*nu -> f_b = mu (so that f_b * nu = eta)
    auto [ha, hb] = split_nu({0, 0, 0, 1}, MU, NU);
    CHECK(ha.c() == std::complex<double>(0, 0));
    CHECK(hb.c() == std::complex<double>(0, 1));

    CHECK_THROWS_AS(split_nu({1, 0, 0, 0}, MU, MU), NonOrthogonalAxes);
}

TEST_CASE("split/reassemble is the identity, both stated forms") {
    std::mt19937_64 rng(17);
    const UnitPureImaginary mu({0, 0.6, 0.8, 0});
    const UnitPureImaginary nu({0, -0.8, 0.6, 0});
    for (int t = 0; t < 1000; ++t) {
        const Quaternion q = testsupport::random_quat(rng);
        auto [fa, fb] = split_nu(q, mu, nu);
        CHECK(modulus(assemble_nu(fa, fb, mu, nu) - q) < 1e-12);
        auto [ga, gb] = split_nu(q, MU, NU);
        CHECK(modulus(assemble_nu(ga, gb, MU, NU) - q) < 1e-12);
        // second stated form: f_a + nu * conj(f_b)
        const Quaternion alt = ga.embed(MU) + NU.q() * conjugate(gb.embed(MU));
        CHECK(modulus(alt - q) < 1e-12);
    }
}

TEST_CASE("slice commutation rule nu z = conj(z) nu") {
    std::mt19937_64 rng(19);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 200; ++t) {
        const Quaternion z = SliceComplex(nd(rng), nd(rng)).embed(MU);
        CHECK(modulus(NU.q() * z - conjugate(z) * NU.q()) < 1e-12);
    }
}

TEST_CASE("unit exponentials preserve modulus") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> th(-10, 10);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = testsupport::random_quat(rng);
        const Quaternion e = unit_exp(MU, th(rng));
        CHECK(modulus(e * q) == doctest::Approx(modulus(q)).epsilon(1e-12));
        CHECK(modulus(q * e) == doctest::Approx(modulus(q)).epsilon(1e-12));
    }
}
