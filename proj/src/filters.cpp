#include "qlct/filters.hpp"

#include <cmath>
#include <random>

namespace qlct {

Field2D multiplicative_filter(const Field2D& f_in, const TransferFunction& H, const TransformSpec& spec,
                              FilterMode mode) {
    const Field2D F = qlct_forward_fast(f_in, spec);
    if (!(H.values.spec == F.spec)) throw GridMismatch("multiplicative_filter: H not on the conjugate grid");
    const Field2D S = pointwise_mul(H.values, F);
    if (mode == FilterMode::SameParams) return qlct_inverse_fast(S, spec);
    // Two-chirp filter graph: the product is the transform of the output under
    // A^ = (a, b; 2c + 1/b, 2d), so read it back with those matrices inverted.
    const TransformSpec hat = spec.with_matrices(spec.A1.hat(), spec.A2.hat());
    return qlct_inverse_fast(S, hat);
}

TransferFunction lowpass_rect(int nx, int ny, int u_lo, int u_hi, int v_lo, int v_hi) {
    if (!(0 <= u_lo && u_lo < u_hi && u_hi <= nx) || !(0 <= v_lo && v_lo < v_hi && v_hi <= ny))
        throw InvalidBand("lowpass_rect: band bounds must satisfy 0 <= lo < hi <= n");
    TransferFunction H;
    H.values = Field2D(GridSpec2D(nx, ny, 1.0, 1.0, true));
    for (int i = u_lo; i < u_hi; ++i)
        for (int j = v_lo; j < v_hi; ++j) H.values.at(i, j) = Quaternion::real(1.0);
    return H;
}

TransferFunction lowpass_band(const GridSpec2D& freq, int denominator) {
    if (denominator < 3) throw InvalidBand("lowpass_band: denominator must be >= 3");
    TransferFunction H =
        lowpass_rect(freq.nx, freq.ny, freq.nx / denominator, 3 * freq.nx / denominator, freq.ny / denominator,
                     3 * freq.ny / denominator);
    H.values.spec = freq;
    return H;
}

static double msn(const Field2D& f, const Field2D& g) {
    if (!(f.spec == g.spec)) throw GridMismatch("psnr/snr: fields on different grids");
    double acc = 0.0;
    for (std::size_t n = 0; n < f.samples.size(); ++n) acc += norm_sq(f.samples[n] - g.samples[n]);
    return acc / static_cast<double>(f.spec.size());
}

double psnr(const Field2D& f, const Field2D& g) {
    const double m = msn(f, g);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(static_cast<double>(f.spec.size()) / m);
}

double psnr_standard(const Field2D& f, const Field2D& g) {
    const double m = msn(f, g);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / m);
}

double snr(const Field2D& reference, const Field2D& test) {
    if (!(reference.spec == test.spec)) throw GridMismatch("snr: fields on different grids");
    double sig = 0.0, noise = 0.0;
    for (std::size_t n = 0; n < reference.samples.size(); ++n) {
        sig += norm_sq(reference.samples[n]);
        noise += norm_sq(reference.samples[n] - test.samples[n]);
    }
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sig / noise);
}

Field2D add_gaussian_noise(const Field2D& f, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw Error("add_gaussian_noise: sigma must be >= 0");
    Field2D out = f;
    if (sigma == 0.0) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, sigma);
    for (auto& q : out.samples) {
        q.w += nd(rng);
        q.x += nd(rng);
        q.y += nd(rng);
        q.z += nd(rng);
    }
    return out;
}

double sigma_for_target_snr(const Field2D& f, double target_db) {
    double sig = 0.0;
    for (const auto& q : f.samples) sig += norm_sq(q);
    // noise power = 4 sigma^2 per sample in expectation
    const double noise_power = sig * std::pow(10.0, -target_db / 10.0);
    return std::sqrt(noise_power / (4.0 * static_cast<double>(f.spec.size())));
}

}  // namespace qlct
