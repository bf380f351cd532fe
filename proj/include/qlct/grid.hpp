#pragma once

#include <cstdint>
#include <vector>

#include "qlct/quaternion.hpp"

namespace qlct {

/// Uniform rectangular sample grid. Centered grids span [-floor(n/2)*d, ...)
/// with the origin exactly on a sample; non-centered grids start at 0.
struct GridSpec2D {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    bool centered = true;

    GridSpec2D() = default;
    GridSpec2D(int nx_, int ny_, double dx_, double dy_, bool centered_ = true)
        : nx(nx_), ny(ny_), dx(dx_), dy(dy_), centered(centered_) {
        if (nx < 2 || ny < 2) throw Error("GridSpec2D: nx, ny must be >= 2");
        if (!(dx > 0.0) || !(dy > 0.0)) throw Error("GridSpec2D: dx, dy must be > 0");
    }

    double x(int i) const { return centered ? (i - nx / 2) * dx : i * dx; }
    double y(int j) const { return centered ? (j - ny / 2) * dy : j * dy; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    double cell_area() const { return dx * dy; }

    bool operator==(const GridSpec2D& o) const = default;
};

/// Sampled quaternion-valued function on a GridSpec2D, row-major in x.
struct Field2D {
    GridSpec2D spec;
    std::vector<Quaternion> samples;

    Field2D() = default;
    explicit Field2D(const GridSpec2D& s) : spec(s), samples(s.size()) {}

    Quaternion& at(int i, int j) { return samples[static_cast<std::size_t>(i) * spec.ny + j]; }
    const Quaternion& at(int i, int j) const { return samples[static_cast<std::size_t>(i) * spec.ny + j]; }
};

/// Rectangle-rule quadrature: sum of samples times the cell area.
Quaternion integrate(const Field2D& f);

/// (integral of |f|^p)^(1/p); p >= 1.
double lp_norm(const Field2D& f, double p);

/// Discrete delta: 1/(dx*dy) at the origin sample, zero elsewhere.
/// integrate(delta_field(spec)) == 1 exactly.
Field2D delta_field(const GridSpec2D& spec);

// ---- field arithmetic -------------------------------------------------------

Field2D operator+(const Field2D& a, const Field2D& b);
Field2D operator-(const Field2D& a, const Field2D& b);
Field2D scale(const Field2D& f, double s);
Field2D left_mul(const Quaternion& q, const Field2D& f);
Field2D right_mul(const Field2D& f, const Quaternion& q);
Field2D pointwise_mul(const Field2D& a, const Field2D& b);
Field2D conj_field(const Field2D& f);

/// f(-x,-y) by index reflection about the origin sample. On even-sized centered
/// grids the mirror of the lowest-index row/column falls off the grid; those
/// samples are zero (compact-support convention).
Field2D reflect_field(const Field2D& f);

/// Frobenius distance between fields relative to the larger Frobenius norm.
double rel_frobenius(const Field2D& a, const Field2D& b);

/// max_i |a_i - b_i| / max_i |a_i| (with guard for all-zero a).
double rel_max_dev(const Field2D& a, const Field2D& b);

// ---- seeded random fields ---------------------------------------------------

enum class FieldKind {
    Iid,          ///< iid standard normal samples in all four components
    IidSlice,     ///< iid normals in (w, x) only; values lie in H(i)
    Smooth,       ///< Gaussian envelope times a random low-degree polynomial
    SmoothSlice,  ///< smooth, slice-valued in H(i)
};

/// Deterministic random field generator used by tests and the verify command.
/// Smooth kinds decay like exp(-alpha*(x^2+y^2)) with alpha chosen so the
/// boundary samples are negligible; the outermost ring is forced to zero so
/// index reflections are exact.
Field2D random_field(const GridSpec2D& spec, std::uint64_t seed, FieldKind kind);

}  // namespace qlct
