#include "qlct/grid.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qlct;
using testsupport::random_quat;

TEST_CASE("integrate: area, parity, gaussian") {
    GridSpec2D s(4, 4, 0.5, 0.5, true);
    Field2D ones(s);
    for (auto& q : ones.samples) q = Quaternion::real(1.0);
    CHECK(modulus(integrate(ones) - Quaternion::real(4.0)) < 1e-12);

    // odd integrand on a symmetric (odd-sized) grid integrates to zero
    GridSpec2D so(9, 9, 0.5, 0.5, true);
    Field2D odd(so);
    for (int i = 0; i < so.nx; ++i)
        for (int j = 0; j < so.ny; ++j) odd.at(i, j) = Quaternion::real(so.x(i));
    CHECK(modulus(integrate(odd)) < 1e-12);

    GridSpec2D sg(128, 128, 12.0 / 128, 12.0 / 128, true);
    const Field2D gauss = testsupport::gaussian_field(sg, 1.0);
    CHECK(modulus(integrate(gauss) - Quaternion::real(M_PI)) < 1e-6);
}

TEST_CASE("integrate is left-linear over quaternion scalars") {
    GridSpec2D s(8, 8, 0.3, 0.4, true);
    std::mt19937_64 rng(5);
    const Field2D f = random_field(s, 1, FieldKind::Iid);
    const Field2D g = random_field(s, 2, FieldKind::Iid);
    const Quaternion alpha = random_quat(rng);
    const Field2D combo = left_mul(alpha, f) + g;
    CHECK(modulus(integrate(combo) - (alpha * integrate(f) + integrate(g))) < 1e-12);
}

TEST_CASE("lp_norm basics") {
    GridSpec2D s(8, 8, 0.5, 0.5, true);
    Field2D zero(s);
    CHECK(lp_norm(zero, 2.0) == 0.0);
    CHECK_THROWS_AS(lp_norm(zero, 0.5), InvalidExponent);

    Field2D c(s);
    const Quaternion v{1, 2, -1, 0.5};
    for (auto& q : c.samples) q = v;
    const double area = s.nx * s.ny * s.cell_area();
    for (double p : {1.0, 2.0, 4.0})
        CHECK(lp_norm(c, p) == doctest::Approx(modulus(v) * std::pow(area, 1.0 / p)).epsilon(1e-12));
}

TEST_CASE("holder inequality |f g|_1 <= |f|_2 |g|_2") {
    GridSpec2D s(12, 12, 0.4, 0.4, true);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Field2D f = random_field(s, 100 + seed, FieldKind::Iid);
        const Field2D g = random_field(s, 200 + seed, FieldKind::Iid);
        CHECK(lp_norm(pointwise_mul(f, g), 1.0) <= lp_norm(f, 2.0) * lp_norm(g, 2.0) * (1 + 1e-12));
    }
}

TEST_CASE("triangle inequality and |int f| <= int |f|") {
    GridSpec2D s(10, 10, 0.3, 0.3, true);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Field2D f = random_field(s, 300 + seed, FieldKind::Iid);
        const Field2D g = random_field(s, 400 + seed, FieldKind::Iid);
        for (double p : {1.0, 2.0, 3.0})
            CHECK(lp_norm(f + g, p) <= lp_norm(f, p) + lp_norm(g, p) + 1e-12);
        CHECK(modulus(integrate(f)) <= lp_norm(f, 1.0) + 1e-12);
    }
}

TEST_CASE("delta_field") {
    GridSpec2D s(8, 8, 1.0, 1.0, true);
    const Field2D d = delta_field(s);
    CHECK(d.at(4, 4) == Quaternion::real(1.0));
    int nonzero = 0;
    for (const auto& q : d.samples)
        if (norm_sq(q) > 0) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(modulus(integrate(d) - Quaternion::real(1.0)) == 0.0);
}

TEST_CASE("reflect_field conventions") {
    GridSpec2D odd(5, 5, 1.0, 1.0, true);
    Field2D f(odd);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) f.at(i, j) = Quaternion::real(10.0 * i + j);
    const Field2D r = reflect_field(f);
    CHECK(r.at(1, 3) == f.at(3, 1));
    CHECK(r.at(2, 2) == f.at(2, 2));

    GridSpec2D even(4, 4, 1.0, 1.0, true);
    Field2D g(even);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = Quaternion::real(10.0 * i + j);
    const Field2D rg = reflect_field(g);
    CHECK(rg.at(0, 1) == Quaternion{});  // mirror of the lowest row falls off the grid
    CHECK(rg.at(1, 2) == g.at(3, 2));
}

TEST_CASE("random_field determinism and boundary ring") {
    GridSpec2D s(16, 16, 0.5, 0.5, true);
    const Field2D a = random_field(s, 42, FieldKind::Smooth);
    const Field2D b = random_field(s, 42, FieldKind::Smooth);
    CHECK(rel_frobenius(a, b) == 0.0);
    for (int i = 0; i < s.nx; ++i) {
        CHECK(norm_sq(a.at(i, 0)) == 0.0);
        CHECK(norm_sq(a.at(i, s.ny - 1)) == 0.0);
    }
    const Field2D sl = random_field(s, 7, FieldKind::SmoothSlice);
    for (const auto& q : sl.samples) {
        CHECK(q.y == 0.0);
        CHECK(q.z == 0.0);
    }
}
