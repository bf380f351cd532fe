#pragma once

#include "qlct/theorems.hpp"

namespace qlct {

/// Quaternion-valued spectral multiplier on a frequency grid, with an
/// invertibility floor used by every spectral division.
struct SpectralSymbol {
    Field2D values;
    double floor = 1e-8;

    /// Throws SingularSymbol naming the offending frequency if any sample
    /// modulus falls below the floor.
    void ensure_invertible() const;
};

struct FredholmOptions {
    double floor = 1e-8;            ///< spectral floor for L[r_a]
    bool use_conjugate_branch = false;  ///< solve via L^{mu,-mu}[r_b] instead
};

struct FredholmResult {
    Field2D f;          ///< solution, slice-valued
    double residual;    ///< |r (*) f - g|_2 / |g|_2 via the spatial-convolution oracle
};

/// First-kind Fredholm equation with kernel
/// K(x,y,tau1,tau2) = W1(x,tau1) r(x-tau1, y-tau2) W2(y,tau2), i.e. r (*) f = g
/// for slice-valued f. Solved by spectral division:
/// L[f] = (e^{-mu(d1 u^2/(2b1) + d2 v^2/(2b2))} L[r_a])^{-1} L[g_a].
FredholmResult solve_fredholm(const Field2D& r, const Field2D& g, const TransformSpec& spec,
                              const FredholmOptions& opts = {});

/// Derivative identities: the transform of the mixed and second x-derivatives
/// equals moment-weighted transforms of f itself. The left side uses
/// finite differences (4th-order stencils), so deviations sit at stencil error.
TheoremReport qlct_derivative_check_mixed(const Field2D& f, const TransformSpec& spec, double tol = 1e-3);
TheoremReport qlct_derivative_check_xx(const Field2D& f, const TransformSpec& spec, double tol = 1e-3);

struct PdeResult {
    Field2D f;             ///< spatial-domain solution
    Field2D f_hat;         ///< its spectrum on the canonical grid
    double spectral_dev;   ///< max dev of symbol*L[f] vs L[g], recomputed from f
};

/// Mixed-derivative equation: the spectral relation is
/// mu*(uv/(b1 b2)) L[f] mu = L[g], inverted as L[f] = mu*(b1 b2/(uv)) L[g] mu.
/// Input is the spectral datum L[g] on the canonical grid; samples on the
/// uv = 0 lines must be zero (SymbolZeroOnAxis otherwise) and the solution
/// spectrum is set to zero there.
PdeResult solve_pde_mixed(const Field2D& g_hat, const TransformSpec& spec);

/// Elliptic equation: spectral division by
/// mu*(a1/b1 + a2/b2) - u^2/b1^2 - v^2/b2^2 (never vanishes when a1/b1 + a2/b2 != 0).
PdeResult solve_pde_elliptic(const Field2D& g, const TransformSpec& spec, double floor = 1e-8);

/// Elliptic solve through the paper's dual route: f = r (*) g with
/// L[r] = symbol^{-1} e^{+mu(d1 u^2/(2b1) + d2 v^2/(2b2))}. Interior samples agree
/// with the spectral-division route.
Field2D solve_pde_elliptic_convolution_route(const Field2D& g, const TransformSpec& spec, double floor = 1e-8);

/// Anisotropic-media equation: three-term symbol with the uv cross term.
PdeResult solve_pde_anisotropic(const Field2D& g, const TransformSpec& spec, double floor = 1e-8);

/// Spectral-convolution example: symbol mu*a1/b1 - u^2/b1^2 - v^2/b2^2
/// (requires a1 != 0); f = l (star) g with L[l] the symbol inverse.
PdeResult solve_pde_spectral(const Field2D& g, const TransformSpec& spec, double floor = 1e-8);

/// Elliptic/anisotropic/mixed spectral symbols sampled on a frequency grid.
SpectralSymbol elliptic_symbol(const GridSpec2D& freq, const TransformSpec& spec);
SpectralSymbol anisotropic_symbol(const GridSpec2D& freq, const TransformSpec& spec);
SpectralSymbol spectral_example_symbol(const GridSpec2D& freq, const TransformSpec& spec);

/// Finite-difference residuals |P(f) - g|_2 / |g|_2 of the three PDE forms,
/// second-order stencils, interior points only.
double pde_residual_elliptic(const Field2D& f, const Field2D& g, const TransformSpec& spec);
double pde_residual_anisotropic(const Field2D& f, const Field2D& g, const TransformSpec& spec);
double pde_residual_mixed(const Field2D& f, const Field2D& g, const TransformSpec& spec);

/// Apply the quaternion PDE operators by finite differences (used for
/// manufactured solutions and the recombination check).
Field2D apply_pde_operator_elliptic(const Field2D& f, const TransformSpec& spec);
Field2D apply_pde_operator_anisotropic(const Field2D& f, const TransformSpec& spec);
Field2D apply_pde_operator_mixed(const Field2D& f, const TransformSpec& spec);

}  // namespace qlct
