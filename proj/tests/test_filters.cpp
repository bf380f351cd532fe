#include "qlct/filters.hpp"

#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace qlct;

namespace {
const TransformSpec TABLE2_SPEC = parse_transform_spec("0 2 -0.5 2 / 0 2 -0.5 4");
}

TEST_CASE("lowpass_rect areas match the stated fractions") {
    const TransferFunction h1 = lowpass_rect(256, 256, 64, 192, 64, 192);
    int ones = 0;
    for (const auto& q : h1.values.samples) ones += (q.w == 1.0);
    CHECK(ones == 256 * 256 / 4);

    const TransferFunction h2 = lowpass_rect(216, 216, 36, 108, 36, 108);
    ones = 0;
    for (const auto& q : h2.values.samples) ones += (q.w == 1.0);
    CHECK(ones == 216 * 216 / 9);

    CHECK_THROWS_AS(lowpass_rect(16, 16, 8, 8, 0, 16), InvalidBand);
    CHECK_THROWS_AS(lowpass_rect(16, 16, 0, 20, 0, 16), InvalidBand);
}

TEST_CASE("lowpass_band uses the paper's fractional convention") {
    GridSpec2D freq(64, 64, 0.3, 0.3, true);
    const TransferFunction h = lowpass_band(freq, 4);
    int ones = 0;
    for (const auto& q : h.values.samples) ones += (q.w == 1.0);
    CHECK(ones == 64 * 64 / 4);
    CHECK(h.values.spec == freq);
    CHECK_THROWS_AS(lowpass_band(freq, 2), InvalidBand);
}

TEST_CASE("psnr in the paper's form") {
    GridSpec2D s(16, 16, 1.0, 1.0, true);
    Field2D f(s), g(s);
    // MSN = 1: every sample differs by a unit-modulus quaternion offset
    for (auto& q : g.samples) q = Quaternion{1, 0, 0, 0};
    CHECK(psnr(f, g) == doctest::Approx(10.0 * std::log10(256.0)).epsilon(1e-12));

    // doubling MSN lowers PSNR by 10 log10(2)
    Field2D g2(s);
    for (auto& q : g2.samples) q = Quaternion{std::sqrt(2.0), 0, 0, 0};
    CHECK(psnr(f, g) - psnr(f, g2) == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-9));

    CHECK(std::isinf(psnr(f, f)));
    CHECK(psnr_standard(f, g) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("snr") {
    GridSpec2D s(16, 16, 1.0, 1.0, true);
    Field2D ref(s);
    for (auto& q : ref.samples) q = Quaternion{1, 1, 1, 1};
    SUBCASE("equal noise power gives 0 dB") {
        Field2D test = ref;
        for (auto& q : test.samples) q = q + Quaternion{1, 1, 1, 1};  // noise power = ref power
        CHECK(snr(ref, test) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("1% noise power gives 20 dB") {
        Field2D test = ref;
        for (auto& q : test.samples) q = q + Quaternion{0.1, 0.1, 0.1, 0.1};
        CHECK(snr(ref, test) == doctest::Approx(20.0).epsilon(1e-12));
    }
    CHECK(std::isinf(snr(ref, ref)));
}

TEST_CASE("gaussian noise") {
    GridSpec2D s(256, 256, 1.0, 1.0, true);
    Field2D f(s);
    SUBCASE("sigma zero is the identity") {
        const Field2D noisy = add_gaussian_noise(f, 0.0, 1);
        CHECK(rel_frobenius(noisy, f) == 0.0);
    }
    SUBCASE("component variance matches sigma^2 within 5%") {
        const double sigma = 0.7;
        const Field2D noisy = add_gaussian_noise(f, sigma, 99);
        double var = 0.0;
        for (const auto& q : noisy.samples) var += norm_sq(q);
        var /= 4.0 * static_cast<double>(noisy.samples.size());
        CHECK(std::abs(var - sigma * sigma) < 0.05 * sigma * sigma);
    }
    SUBCASE("psnr decreases with sigma; determinism per seed") {
        GridSpec2D sm(64, 64, 1.0, 1.0, true);
        const Field2D base = random_field(sm, 5, FieldKind::Smooth);
        double prev = std::numeric_limits<double>::infinity();
        for (double sigma : {0.05, 0.1, 0.2}) {
            const double p = psnr(base, add_gaussian_noise(base, sigma, 7));
            CHECK(p < prev);
            prev = p;
        }
        CHECK(rel_frobenius(add_gaussian_noise(base, 0.1, 7), add_gaussian_noise(base, 0.1, 7)) == 0.0);
    }
    SUBCASE("sigma_for_target_snr hits its target") {
        GridSpec2D sm(64, 64, 1.0, 1.0, true);
        const Field2D base = random_field(sm, 6, FieldKind::Smooth);
        const double sigma = sigma_for_target_snr(base, 3.4);
        const double got = snr(base, add_gaussian_noise(base, sigma, 11));
        CHECK(std::abs(got - 3.4) < 0.5);
    }
}

TEST_CASE("multiplicative filter") {
    GridSpec2D s(32, 32, 1.0, 1.0, true);
    const Field2D f = random_field(s, 70, FieldKind::Smooth);
    const GridSpec2D freq = conjugate_grid(s, TABLE2_SPEC.A1, TABLE2_SPEC.A2);

    SUBCASE("all-pass in SameParams mode is a round trip") {
        TransferFunction allpass;
        allpass.values = Field2D(freq);
        for (auto& q : allpass.values.samples) q = Quaternion::real(1.0);
        const Field2D out = multiplicative_filter(f, allpass, TABLE2_SPEC, FilterMode::SameParams);
        CHECK(rel_frobenius(f, out) < 1e-6);
    }
    SUBCASE("zero transfer gives zero output in either mode") {
        TransferFunction zero;
        zero.values = Field2D(freq);
        CHECK(lp_norm(multiplicative_filter(f, zero, TABLE2_SPEC, FilterMode::SameParams), 2.0) == 0.0);
        CHECK(lp_norm(multiplicative_filter(f, zero, TABLE2_SPEC, FilterMode::DoubledParams), 2.0) == 0.0);
    }
    SUBCASE("band-limited input inside the passband is recovered") {
        // build the input from an in-band spectrum
        TransferFunction band = lowpass_band(freq, 4);
        Field2D spectrum(freq);
        const Field2D noise = random_field(freq, 71, FieldKind::Smooth);
        for (std::size_t n = 0; n < spectrum.samples.size(); ++n)
            spectrum.samples[n] = band.values.samples[n].w != 0.0 ? noise.samples[n] : Quaternion{};
        const Field2D fin = qlct_inverse_fast(spectrum, TABLE2_SPEC);
        const Field2D out = multiplicative_filter(fin, band, TABLE2_SPEC, FilterMode::SameParams);
        CHECK(rel_frobenius(fin, out) < 1e-5);
    }
    SUBCASE("doubled-params mode reads back under the hat matrices") {
        TransferFunction allpass;
        allpass.values = Field2D(freq);
        for (auto& q : allpass.values.samples) q = Quaternion::real(1.0);
        const Field2D out = multiplicative_filter(f, allpass, TABLE2_SPEC, FilterMode::DoubledParams);
        // under H = 1 the output's hat-matrix transform equals the input's transform
        const TransformSpec hat = TABLE2_SPEC.with_matrices(TABLE2_SPEC.A1.hat(), TABLE2_SPEC.A2.hat());
        CHECK(rel_frobenius(qlct_forward_fast(out, hat), qlct_forward_fast(f, TABLE2_SPEC)) < 1e-10);
    }
    SUBCASE("grid mismatch rejected") {
        TransferFunction wrong;
        wrong.values = Field2D(GridSpec2D(16, 16, 1.0, 1.0, true));
        CHECK_THROWS_AS(multiplicative_filter(f, wrong, TABLE2_SPEC, FilterMode::SameParams), GridMismatch);
    }
}
