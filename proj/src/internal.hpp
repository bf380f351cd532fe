#pragma once

// Library-private helpers: complex slice planes, frames, row parallelism.

#include <complex>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "qlct/grid.hpp"
#include "qlct/params.hpp"

namespace qlct::detail {

using cplx = std::complex<double>;

/// Complex field over a GridSpec2D, row-major; one slice plane of a quaternion field.
struct SliceField {
    GridSpec2D spec;
    std::vector<cplx> v;

    SliceField() = default;
    explicit SliceField(const GridSpec2D& s) : spec(s), v(s.size()) {}
    cplx& at(int i, int j) { return v[static_cast<std::size_t>(i) * spec.ny + j]; }
    const cplx& at(int i, int j) const { return v[static_cast<std::size_t>(i) * spec.ny + j]; }
};

/// Orthonormal imaginary frame (mu, nu, eta) with eta = mu*nu; the basis of the
/// f = f_a + f_b*nu component split.
struct Frame {
    UnitPureImaginary mu;
    UnitPureImaginary nu;
    UnitPureImaginary eta;

    Frame(const UnitPureImaginary& mu_, const UnitPureImaginary& nu_)
        : mu(mu_), nu(nu_), eta(UnitPureImaginary(mu_.q() * nu_.q())) {}

    static Frame canonical() { return {UnitPureImaginary::i_axis(), UnitPureImaginary::j_axis()}; }
};

/// Completes mu with a deterministic perpendicular axis (used when the spec's
/// nu is parallel to mu and a split basis is still needed).
Frame frame_for(const UnitPureImaginary& mu, const UnitPureImaginary& nu);

/// f -> (A, B) with f = A + B*nu in the frame: A = w + (v.mu) i, B = (v.nu) + (v.eta) i.
void split_planes(const Field2D& f, const Frame& fr, SliceField& a, SliceField& b);
Field2D assemble_planes(const SliceField& a, const SliceField& b, const Frame& fr);

/// Runs fn(i) for i in [0, n), partitioned over threads. Thread count comes
/// from QLCT_THREADS (default: hardware concurrency, capped at 8). Each index
/// is processed wholly inside one task so results do not depend on the count.
void parallel_for(int n, const std::function<void(int)>& fn);

inline double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace qlct::detail
