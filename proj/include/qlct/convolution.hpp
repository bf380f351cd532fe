#pragma once

#include "qlct/transform.hpp"

namespace qlct {

/// Weight W_A^mu(t,tau) = (1/sqrt(2*pi*b*mu)) e^{mu*tau*(tau-t)*a/b}.
/// Constant modulus 1/sqrt(2*pi*|b|).
Quaternion weight_w(const ParamMatrix& A, const UnitPureImaginary& mu, double t, double tau);

/// Chirp-free weight E_A^mu(x,tau) = (1/sqrt(-2*pi*b*mu)) e^{-mu*tau*x*a/b}.
Quaternion weight_e(const ParamMatrix& A, const UnitPureImaginary& mu, double x, double tau);

/// Zero-padded output grid of a linear convolution of two same-spec fields:
/// (2nx+1) x (2ny+1), centered, same spacing. The support of the padded result
/// sits inside this grid for either parity of nx, ny.
GridSpec2D padded_spec(const GridSpec2D& in);

/// Classical convolution (f*g)(x,y) = sum f(x-tau1, y-tau2) g(tau1,tau2) dtau,
/// zero padding outside the grid. Output on padded_spec(f.spec).
Field2D classical_convolve(const Field2D& f, const Field2D& g);

/// Spatial convolution of the QLCT:
/// (f (*) g)(x,y) = sum W1(x,tau1) f(tau1,tau2) g(x-tau1, y-tau2) W2(y,tau2) dtau,
/// with the weights taken on the mu and nu axes of `spec`. Output padded.
Field2D spatial_convolve(const Field2D& f, const Field2D& g, const TransformSpec& spec);

/// Spectral convolution: f (star) g = L^{-1}_{A1^-1,A2^-1}[ L[f] . L[g] ] via the
/// fast transform path. Requires nu = mu in `spec`. Output on the input grid.
Field2D spectral_convolve(const Field2D& f, const Field2D& g, const TransformSpec& spec);

/// Spectral convolution through its four-term spatial representation: weighted
/// component convolutions of (f_a, f_b, g_a, conj(g_b)) with W/E weights and
/// per-term phase corrections in the transform domain. Agrees with
/// spectral_convolve to roundoff; exercised as an independent route.
Field2D spectral_convolve_spatial_form(const Field2D& f, const Field2D& g, const TransformSpec& spec);

/// Spatial correlation  f (o) g = conj(f(-.,-.)) (*) g. Output padded.
Field2D correlate_spatial(const Field2D& f, const Field2D& g, const TransformSpec& spec);

/// Spectral correlation  f (R) g = f (star) conj(g(-.,-.)). Output on input grid.
Field2D correlate_spectral(const Field2D& f, const Field2D& g, const TransformSpec& spec);

}  // namespace qlct
