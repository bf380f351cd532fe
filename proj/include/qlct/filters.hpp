#pragma once

#include "qlct/transform.hpp"

namespace qlct {

/// Quaternion-valued spectral multiplier H(u,v) on the canonical conjugate grid.
struct TransferFunction {
    Field2D values;
};

enum class FilterMode {
    SameParams,     ///< output read back through the inverse of the input matrices
    DoubledParams,  ///< output lives under A^ = (a, b; 2c + 1/b, 2d)
};

/// Multiplicative filter: f_out = L^{-1}[ H . L[f_in] ] with the inverse taken
/// under A (SameParams) or A^ (DoubledParams). All-pass H in SameParams mode is
/// an exact round trip.
Field2D multiplicative_filter(const Field2D& f_in, const TransferFunction& H, const TransformSpec& spec,
                              FilterMode mode = FilterMode::SameParams);

/// Indicator transfer function with passband [u_lo, u_hi) x [v_lo, v_hi) in
/// index space on an nx x ny centered spectrum. The paper's H1 is
/// lowpass_rect(n, m, n/4, 3n/4, m/4, 3m/4) with area nm/4; H2 uses sixths.
TransferFunction lowpass_rect(int nx, int ny, int u_lo, int u_hi, int v_lo, int v_hi);

/// Fractional band helper: denominator k gives passband [n/k, 3n/k) per axis.
TransferFunction lowpass_band(const GridSpec2D& freq, int denominator);

/// PSNR in the paper's form: 10*log10(M*N / MSN) with
/// MSN = (1/(M*N)) * sum |f_ij - g_ij|^2. Identical images give +infinity.
double psnr(const Field2D& f, const Field2D& g);

/// Conventional PSNR with peak value 1.0 (channels scaled to [0,1]):
/// 10*log10(1 / MSN). Exposed for sanity comparisons only.
double psnr_standard(const Field2D& f, const Field2D& g);

/// SNR = 10*log10( sum|ref|^2 / sum|ref - test|^2 ). (The paper reports SNR
/// without giving a formula; this is the standard power ratio.)
double snr(const Field2D& reference, const Field2D& test);

/// Adds independent zero-mean Gaussian noise of deviation sigma to every
/// quaternion component of every sample. Deterministic per seed.
Field2D add_gaussian_noise(const Field2D& f, double sigma, std::uint64_t seed);

/// Sigma that makes snr(f, f + noise) approximately target_db for this field.
double sigma_for_target_snr(const Field2D& f, double target_db);

}  // namespace qlct
