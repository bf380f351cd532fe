#include "qlct/params.hpp"

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace qlct;

TEST_CASE("unit determinant enforced and preserved by derived matrices") {
    CHECK_THROWS_AS(ParamMatrix(1, 1, 1, 1), Error);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const ParamMatrix A = testsupport::random_param(rng);
        CHECK(A.det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.tilde().det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.breve().det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.hat().det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.check().det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.inverse().det() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(A.inverse().inverse() == A);
    }
}

TEST_CASE("qfrft matrices") {
    const TransformSpec qft_case = qfrft_spec(M_PI / 2, M_PI / 2);
    CHECK(qft_case.A1 == ParamMatrix::fourier());
    CHECK(qft_case.A2 == ParamMatrix::fourier());

    const ParamMatrix r = ParamMatrix::rotation(M_PI / 4);
    CHECK(r.a == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(r.b == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(r.c == doctest::Approx(-std::sqrt(2.0) / 2));
    CHECK(r.det() == doctest::Approx(1.0));
}

TEST_CASE("spec axis relations") {
    const auto mu = UnitPureImaginary::i_axis();
    const auto nu = UnitPureImaginary::j_axis();
    CHECK(TransformSpec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, mu).axis_relation() ==
          AxisRelation::Parallel);
    CHECK(TransformSpec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, -mu).axis_relation() ==
          AxisRelation::AntiParallel);
    CHECK(TransformSpec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, nu).axis_relation() ==
          AxisRelation::Perpendicular);
    const UnitPureImaginary skew({0, std::sqrt(0.5), std::sqrt(0.5), 0});
    CHECK_THROWS_AS(TransformSpec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, skew), NonOrthogonalAxes);
}

TEST_CASE("spec text round trip") {
    const TransformSpec spec = parse_transform_spec("0 2 -0.5 2 / 0 2 -0.5 4");
    CHECK(spec.A1.b == 2.0);
    CHECK(spec.A2.d == 4.0);
    CHECK(spec.axis_relation() == AxisRelation::Parallel);

    const TransformSpec round = parse_transform_spec(format_transform_spec(spec));
    CHECK(round.A1 == spec.A1);
    CHECK(round.A2 == spec.A2);
    CHECK(round.mu.dot(spec.mu) == doctest::Approx(1.0));

    CHECK_THROWS_WITH_AS(parse_transform_spec("1 1 1 1 / 0 1 -1 0"),
                         "transform spec: matrix A1 is not unit-determinant", Error);
    CHECK_THROWS_AS(parse_transform_spec("1 2 3"), Error);

    const TransformSpec two_axis = parse_transform_spec("0 1 -1 0 / 0 1 -1 0 / 1 0 0 / 0 1 0");
    CHECK(two_axis.axis_relation() == AxisRelation::Perpendicular);
}
