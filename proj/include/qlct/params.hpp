#pragma once

#include <iosfwd>
#include <string>

#include "qlct/quaternion.hpp"

namespace qlct {

/// Real 2x2 unit-determinant parameter matrix (a b; c d) of one transform axis.
struct ParamMatrix {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    ParamMatrix() = default;
    ParamMatrix(double a_, double b_, double c_, double d_, double tol = 1e-12) : a(a_), b(b_), c(c_), d(d_) {
        if (std::abs(det() - 1.0) > tol) throw Error("ParamMatrix: determinant must be 1");
    }

    double det() const { return a * d - b * c; }
    bool degenerate() const { return b == 0.0; }

    ParamMatrix inverse() const { return {d, -b, -c, a}; }
    /// (a, b, c/2 - 1/(2b), d/2): absorbs the convolution-theorem phase.
    ParamMatrix tilde() const { return {a, b, c / 2.0 - 1.0 / (2.0 * b), d / 2.0}; }
    /// (2a, b, 1/b + 2c, d): product-theorem matrix.
    ParamMatrix breve() const { return {2.0 * a, b, 1.0 / b + 2.0 * c, d}; }
    /// (a, b, 2c + 1/b, 2d): output matrix of the two-chirp filter graph.
    ParamMatrix hat() const { return {a, b, 2.0 * c + 1.0 / b, 2.0 * d}; }
    /// (-a, b, c, -d): sign-flipped variant used by the spectral convolution terms.
    ParamMatrix check() const { return {-a, b, c, -d}; }

    static ParamMatrix fourier() { return {0.0, 1.0, -1.0, 0.0}; }
    /// Rotation by angle; the fractional-Fourier parameter matrix.
    static ParamMatrix rotation(double angle) {
        return {std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle)};
    }

    bool operator==(const ParamMatrix& o) const = default;
};

/// How the two kernel axes of a two-sided transform relate.
enum class AxisRelation { Parallel, AntiParallel, Perpendicular };

/// Bundle (A1, A2, mu, nu) fixing one two-sided QLCT instance.
/// The axes must satisfy nu = mu, nu = -mu, or nu perpendicular to mu.
struct TransformSpec {
    ParamMatrix A1;
    ParamMatrix A2;
    UnitPureImaginary mu;
    UnitPureImaginary nu;

    TransformSpec(const ParamMatrix& A1_, const ParamMatrix& A2_, const UnitPureImaginary& mu_,
                  const UnitPureImaginary& nu_, double tol = 1e-12)
        : A1(A1_), A2(A2_), mu(mu_), nu(nu_) {
        const double d = mu.dot(nu);
        if (std::abs(d) > tol && std::abs(std::abs(d) - 1.0) > tol)
            throw NonOrthogonalAxes("TransformSpec: nu must equal +-mu or be perpendicular to mu");
    }

    AxisRelation axis_relation(double tol = 1e-12) const {
        const double d = mu.dot(nu);
        if (std::abs(d - 1.0) <= tol) return AxisRelation::Parallel;
        if (std::abs(d + 1.0) <= tol) return AxisRelation::AntiParallel;
        return AxisRelation::Perpendicular;
    }

    TransformSpec inverse() const { return {A1.inverse(), A2.inverse(), mu, nu}; }
    TransformSpec with_matrices(const ParamMatrix& B1, const ParamMatrix& B2) const { return {B1, B2, mu, nu}; }
    TransformSpec with_nu_negated() const { return {A1, A2, mu, -nu}; }

    /// L^{mu,mu} with canonical i-axis on both sides.
    static TransformSpec canonical(const ParamMatrix& A1_, const ParamMatrix& A2_) {
        return {A1_, A2_, UnitPureImaginary::i_axis(), UnitPureImaginary::i_axis()};
    }
    /// L^{mu,nu} with mu = i, nu = j.
    static TransformSpec canonical_two_axis(const ParamMatrix& A1_, const ParamMatrix& A2_) {
        return {A1_, A2_, UnitPureImaginary::i_axis(), UnitPureImaginary::j_axis()};
    }
};

/// Fractional-Fourier spec: rotation matrices for angles (alpha, beta),
/// canonical equal axes. alpha = beta = pi/2 is the Fourier case.
TransformSpec qfrft_spec(double alpha, double beta);

/// Flat text form: `a1 b1 c1 d1 / a2 b2 c2 d2 / mu_x mu_y mu_z / nu_x nu_y nu_z`.
/// Newlines are accepted in place of the slashes.
TransformSpec parse_transform_spec(const std::string& text);
std::string format_transform_spec(const TransformSpec& spec);
TransformSpec load_transform_spec(const std::string& path);

}  // namespace qlct
