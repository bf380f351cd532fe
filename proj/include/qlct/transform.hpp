#pragma once

#include "qlct/grid.hpp"
#include "qlct/params.hpp"

namespace qlct {

/// QLCT kernel K_A^mu(x,u) = (1/sqrt(mu*2*pi*b)) e^{mu(a x^2/(2b) - xu/b + d u^2/(2b))}.
/// The square root of mu*2*pi*b takes the principal branch in the mu-slice
/// plane: 1/sqrt(mu*2*pi*b) = (1/sqrt(2*pi*|b|)) e^{-mu*sgn(b)*pi/4}.
/// Throws DegenerateB when b = 0.
Quaternion kernel_eval(const ParamMatrix& A, const UnitPureImaginary& mu, double x, double u);

/// Canonical conjugate grid: frequency spacing du = 2*pi*|b1|/(nx*dx) (and
/// likewise for v), centered. With this grid the fast path's inner sums are
/// plain DFTs and the discrete inverse transform is an exact round trip.
GridSpec2D conjugate_grid(const GridSpec2D& in, const ParamMatrix& A1, const ParamMatrix& A2);

/// Two-sided QLCT by direct summation: out(u,v) = sum K1(x,u) f(x,y) K2(y,v) dx dy
/// with the left kernel multiplied on the left and the right kernel on the
/// right. O(N^4); accepts any output grid. This is the oracle path.
Field2D qlct_forward_direct(const Field2D& f, const TransformSpec& spec, const GridSpec2D& out_grid);

/// Fast path on the canonical conjugate grid. The field is split into slice
/// planes f = f_a + f_b*nu' and each plane goes through a chirp-DFT-chirp
/// pipeline; O(N^2 log N). Agrees with qlct_forward_direct to roundoff.
Field2D qlct_forward_fast(const Field2D& f, const TransformSpec& spec);

/// Inverse transform: the forward machinery with A_i^{-1} = (d,-b;-c,a).
/// Direct-summation flavour with explicit output grid.
Field2D qlct_inverse_direct(const Field2D& F, const TransformSpec& spec, const GridSpec2D& out_grid);

/// Fast inverse from the canonical conjugate grid back to the matching spatial
/// grid (dx = 2*pi*|b1|/(nx*du)). Exact round trip with qlct_forward_fast.
Field2D qlct_inverse_fast(const Field2D& F, const TransformSpec& spec);

/// Degenerate branches of the QLCT definition for b1 = 0 and/or b2 = 0:
/// sqrt(d)*chirp*scale per axis, with f(d*u, y) resampled by nearest-grid
/// lookup. Demo-grade (first-order accurate); requires d > 0 on a degenerate axis.
Field2D qlct_degenerate(const Field2D& f, const TransformSpec& spec);

/// Two-sided QFT of Eq.-(776) form, with no kernel normalization:
/// sum e^{-mu*u*x} f(x,y) e^{-nu*v*y} dx dy on the canonical grid (b = 1).
/// Relates to the QLCT at A = (0,1;-1,0) by the constant
/// e^{-mu*pi/4}/sqrt(2*pi) per axis.
Field2D qft(const Field2D& f, const UnitPureImaginary& mu, const UnitPureImaginary& nu);
Field2D qft_inverse(const Field2D& F, const UnitPureImaginary& mu, const UnitPureImaginary& nu);

/// Max deviation between the fast path and the direct oracle on the canonical
/// grid, relative Frobenius. Convenience for the CLI --oracle flag.
double fast_vs_direct_deviation(const Field2D& f, const TransformSpec& spec);

}  // namespace qlct
