#pragma once

#include <string>
#include <vector>

#include "qlct/convolution.hpp"

namespace qlct {

/// Outcome of one executable theorem check. Deviations are absolute sample
/// deviations normalized by the max magnitude of the reference side.
struct TheoremReport {
    std::string theorem;
    double max_rel = 0.0;
    int at_i = 0;
    int at_j = 0;
    double mean_rel = 0.0;
    double tol = 0.0;
    bool pass = false;

    /// `theorem=<name> max_rel=<e> at=(i,j) mean_rel=<e> tol=<e> pass=<bool>`
    std::string to_line() const;
};

/// Spatial convolution theorem in H(mu): both stated identities
///   L[f (*) g] = e^{-mu d1 u^2/(2b1)} e^{-mu d2 v^2/(2b2)} L[f] L[g]
///   L[f (*) g] = L_tilde[f] L_tilde[g]
/// plus the agreement of the two right-hand sides (checked at 1e-10).
/// Requires slice-valued f, g (in H(mu)) and nu = mu.
TheoremReport verify_conv_theorem_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                        double tol = 1e-6);

/// Spatial convolution theorem in H: component identity with the
/// L^{mu,-mu} cross terms and the trailing nu, in both the phase-bearing and
/// tilde-matrix forms.
TheoremReport verify_conv_theorem_full(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                       double tol = 1e-6);

/// General two-axis theorem (mu perpendicular to nu) with g = g1 + mu*g2,
/// g1, g2 in H(nu). The nested transform on the right-hand side is evaluated
/// literally with the inner transform frozen at the outer output point;
/// O(N^4), guarded to N <= 24.
TheoremReport verify_general_conv_theorem(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                          double tol = 1e-5);

/// Parseval: integral of f*conj(r) equals integral of L[f]*conj(L[r]) where
/// conj(r) is the chirped reflection of g. Includes the energy identity
/// (r = f) as a sub-check. Slice-valued inputs.
TheoremReport verify_parseval(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol = 1e-5);

/// Product theorem on H(mu): L of the chirped pointwise product equals the
/// spatial convolution of the transforms with inverse parameter matrices, in
/// both stated forms. Carries spectral truncation error; use decaying fields.
TheoremReport verify_product_theorem_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                           double tol = 1e-5);

/// Product theorem on H: the four-component form with L^{mu,-mu} terms.
TheoremReport verify_product_theorem_full(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                          double tol = 1e-5);

/// Correlation theorem on H(mu) for f (o) g, both stated forms.
TheoremReport verify_correlation_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                       double tol = 1e-5);

/// Correlation theorem on H: component form with reflected-argument factors.
TheoremReport verify_correlation_full(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                      double tol = 1e-5);

/// Spectral convolution theorem L[f star g] = L[f] L[g] together with the
/// spectral correlation theorem L[f (R) g] = L[f](u,v) L[conj g](-u,-v).
TheoremReport verify_spectral_conv_theorem(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                           double tol = 1e-6);

/// The default eight-report suite on seeded random fields, as run by the CLI
/// verify command. `include_general` adds the O(N^4) two-axis theorem.
std::vector<TheoremReport> run_theorem_suite(int size, std::uint64_t seed, double tol_scale = 1.0,
                                             bool include_general = false);

}  // namespace qlct
