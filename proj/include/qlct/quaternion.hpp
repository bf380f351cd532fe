#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "qlct/errors.hpp"

namespace qlct {

/// Hamilton quaternion q = w + x*i + y*j + z*k over doubles.
/// The basis units obey i^2 = j^2 = k^2 = ijk = -1 and ij = -ji = k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }

    constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    constexpr bool operator==(const Quaternion& o) const = default;
};

/// Hamilton product.
constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// q^{-1} = conj(q)/|q|^2. Throws when |q| is below `floor`.
inline Quaternion quat_inverse(const Quaternion& q, double floor = 1e-300) {
    const double n2 = norm_sq(q);
    if (!(n2 > floor * floor)) throw DivisionByZeroQuaternion("quat_inverse: modulus below floor");
    return conjugate(q) / n2;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

/// Element of U: zero real part, unit modulus, axis^2 = -1.
class UnitPureImaginary {
  public:
    explicit UnitPureImaginary(const Quaternion& axis, double tol = 1e-12) : axis_(axis) {
        if (std::abs(axis.w) > tol) throw NonOrthogonalAxes("unit pure imaginary: nonzero real part");
        const double m = modulus(axis);
        if (std::abs(m - 1.0) > tol) throw NonOrthogonalAxes("unit pure imaginary: modulus != 1");
        // axis^2 = -|axis|^2 for pure quaternions; re-checked to guard NaNs.
        const Quaternion sq = axis * axis;
        if (std::abs(sq.w + 1.0) > tol || std::abs(sq.x) > tol || std::abs(sq.y) > tol || std::abs(sq.z) > tol)
            throw NonOrthogonalAxes("unit pure imaginary: axis^2 != -1");
    }

    const Quaternion& q() const { return axis_; }
    std::array<double, 3> vec() const { return {axis_.x, axis_.y, axis_.z}; }
    UnitPureImaginary operator-() const { return UnitPureImaginary(-axis_); }

    /// Real part of mu*nu, i.e. minus the Euclidean inner product of the axes.
    double dot(const UnitPureImaginary& o) const { return axis_.x * o.axis_.x + axis_.y * o.axis_.y + axis_.z * o.axis_.z; }

    bool orthogonal_to(const UnitPureImaginary& o, double tol = 1e-12) const { return std::abs(dot(o)) <= tol; }

    static UnitPureImaginary i_axis() { return UnitPureImaginary({0, 1, 0, 0}); }
    static UnitPureImaginary j_axis() { return UnitPureImaginary({0, 0, 1, 0}); }
    static UnitPureImaginary k_axis() { return UnitPureImaginary({0, 0, 0, 1}); }

  private:
    Quaternion axis_;
};

/// e^{mu*theta} = cos(theta) + mu*sin(theta) for a unit pure imaginary mu.
inline Quaternion unit_exp(const UnitPureImaginary& mu, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const auto v = mu.vec();
    return {c, s * v[0], s * v[1], s * v[2]};
}

/// Slice-complex number q_r + mu*q_mu in H(mu).
struct SliceComplex {
    double re = 0.0;
    double im = 0.0;

    SliceComplex() = default;
    SliceComplex(double re_, double im_) : re(re_), im(im_) {}

    Quaternion embed(const UnitPureImaginary& mu) const {
        const auto v = mu.vec();
        return {re, im * v[0], im * v[1], im * v[2]};
    }
    std::complex<double> c() const { return {re, im}; }
};

/// Splits q = f_a + f_b * nu with f_a, f_b in H(mu).
/// Requires mu perpendicular to nu. With the canonical axes mu = i, nu = j this is
/// f_a = q_w + mu*q_x, f_b = q_y + mu*q_z.
inline std::pair<SliceComplex, SliceComplex> split_nu(const Quaternion& q, const UnitPureImaginary& mu,
                                                      const UnitPureImaginary& nu, double tol = 1e-12) {
    if (!mu.orthogonal_to(nu, tol)) throw NonOrthogonalAxes("split_nu: axes not perpendicular");
    const Quaternion eta = mu.q() * nu.q();
    const auto proj = [&q](const Quaternion& e) { return q.x * e.x + q.y * e.y + q.z * e.z; };
    return {SliceComplex{q.w, proj(mu.q())}, SliceComplex{proj(nu.q()), proj(eta)}};
}

/// Inverse of split_nu: f_a + f_b * nu.
inline Quaternion assemble_nu(const SliceComplex& fa, const SliceComplex& fb, const UnitPureImaginary& mu,
                              const UnitPureImaginary& nu) {
    return fa.embed(mu) + fb.embed(mu) * nu.q();
}

}  // namespace qlct
