// Command-line surface: transforms, filtering, theorem verification, and the
// integral/PDE solvers, over QFLD fields and PNG/PPM images.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "qlct/convolution.hpp"
#include "qlct/filters.hpp"
#include "qlct/image.hpp"
#include "qlct/qfld_io.hpp"
#include "qlct/solvers.hpp"
#include "qlct/theorems.hpp"

using namespace qlct;

namespace {

Field2D load_field(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".qfld") return read_qfld(path);
    return image_to_field(path);
}

void save_field(const Field2D& f, const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".qfld") {
        write_qfld(path, f);
        return;
    }
    field_to_image(f, path);
}

int parse_band_denominator(const std::string& band) {
    // the paper's fractional convention: "1/4" means passband (N/4, 3N/4)
    if (band.rfind("1/", 0) != 0) throw Error("band: expected the form 1/k, e.g. 1/4");
    const int k = std::atoi(band.c_str() + 2);
    if (k < 3) throw Error("band: denominator must be >= 3");
    return k;
}

int cmd_transform(const std::string& spec_path, const std::string& in_path, const std::string& out_path,
                  bool inverse, bool oracle) {
    const TransformSpec spec = load_transform_spec(spec_path);
    const Field2D in = load_field(in_path);
    if (spec.A1.degenerate() || spec.A2.degenerate()) {
        const Field2D out = qlct_degenerate(in, spec);
        save_field(out, out_path);
        std::cout << "degenerate branch: wrote " << out_path << "\n";
        return 0;
    }
    const Field2D out = inverse ? qlct_inverse_fast(in, spec) : qlct_forward_fast(in, spec);
    if (oracle) {
        const double dev = inverse ? fast_vs_direct_deviation(in, spec.inverse())
                                   : fast_vs_direct_deviation(in, spec);
        std::cout << "oracle deviation (rel Frobenius, fast vs direct): " << dev << "\n";
    }
    save_field(out, out_path);
    std::cout << "wrote " << out_path << " (" << out.spec.nx << "x" << out.spec.ny << ")\n";
    return 0;
}

int cmd_filter(const std::string& spec_path, const std::string& in_path, const std::string& out_path,
               const std::string& band, const std::string& transfer_path, bool doubled, double noise_sigma,
               double noise_snr, std::uint64_t seed) {
    const TransformSpec spec = load_transform_spec(spec_path);
    const Field2D clean = load_field(in_path);

    Field2D input = clean;
    if (noise_snr > 0.0) noise_sigma = sigma_for_target_snr(clean, noise_snr);
    if (noise_sigma > 0.0) {
        input = add_gaussian_noise(clean, noise_sigma, seed);
        std::cout << "noise: sigma=" << noise_sigma << " SNR=" << snr(clean, input)
                  << " PSNR(noisy)=" << psnr(clean, input) << "\n";
    }

    const GridSpec2D freq = conjugate_grid(input.spec, spec.A1, spec.A2);
    TransferFunction H;
    if (!transfer_path.empty()) {
        H.values = read_qfld(transfer_path);
        H.values.spec = freq;
    } else {
        H = lowpass_band(freq, parse_band_denominator(band));
    }

    const Field2D out =
        multiplicative_filter(input, H, spec, doubled ? FilterMode::DoubledParams : FilterMode::SameParams);
    save_field(out, out_path);
    std::cout << "filtered: SNR=" << snr(clean, out) << " PSNR=" << psnr(clean, out) << "\n";
    return 0;
}

int cmd_verify(int size, std::uint64_t seed, double tol_scale, bool include_general) {
    const auto reports = run_theorem_suite(size, seed, tol_scale, include_general);
    bool all = true;
    for (const auto& r : reports) {
        std::cout << r.to_line() << "\n";
        all = all && r.pass;
    }
    if (!all) {
        for (const auto& r : reports)
            if (!r.pass) std::cerr << "FAILED: " << r.theorem << "\n";
        return 1;
    }
    return 0;
}

int cmd_solve(const std::string& kind, const std::string& spec_path, const std::string& g_path,
              const std::string& r_path, const std::string& out_path) {
    const TransformSpec spec = load_transform_spec(spec_path);
    const Field2D g = load_field(g_path);
    if (kind == "fredholm") {
        if (r_path.empty()) throw Error("solve fredholm: needs --kernel r.qfld");
        const Field2D r = load_field(r_path);
        const FredholmResult res = solve_fredholm(r, g, spec);
        save_field(res.f, out_path);
        std::cout << "fredholm residual |r(*)f - g|_2/|g|_2 = " << res.residual << "\n";
        return 0;
    }
    PdeResult res;
    if (kind == "mixed") {
        res = solve_pde_mixed(g, spec);  // g is the spectral datum here
        std::cout << "mixed: spectral relation deviation = " << res.spectral_dev << "\n";
    } else if (kind == "elliptic") {
        res = solve_pde_elliptic(g, spec);
        std::cout << "elliptic: spectral relation deviation = " << res.spectral_dev
                  << ", fd residual = " << pde_residual_elliptic(res.f, g, spec) << "\n";
    } else if (kind == "anisotropic") {
        res = solve_pde_anisotropic(g, spec);
        std::cout << "anisotropic: spectral relation deviation = " << res.spectral_dev
                  << ", fd residual = " << pde_residual_anisotropic(res.f, g, spec) << "\n";
    } else if (kind == "spectral") {
        res = solve_pde_spectral(g, spec);
        std::cout << "spectral: relation deviation = " << res.spectral_dev << "\n";
    } else {
        throw Error("solve: unknown kind " + kind);
    }
    save_field(res.f, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_convert(const std::string& in_path, const std::string& out_path) {
    save_field(load_field(in_path), out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion linear canonical transform toolkit"};
    app.require_subcommand(1);

    std::string spec_path, in_path, out_path, band = "1/4", transfer_path, kind, kernel_path;
    bool inverse = false, oracle = false, doubled = false, include_general = false;
    double tol_scale = 1.0, noise_sigma = 0.0, noise_snr = 0.0;
    int size = 16;
    std::uint64_t seed = 1;

    auto* t = app.add_subcommand("transform", "forward/inverse QLCT of a field or image");
    t->add_option("--spec", spec_path, "transform spec file")->required();
    t->add_option("input", in_path)->required();
    t->add_option("output", out_path)->required();
    t->add_flag("--inverse", inverse, "apply the inverse transform");
    t->add_flag("--oracle", oracle, "also run the direct-summation oracle and print the deviation");

    auto* f = app.add_subcommand("filter", "multiplicative filter in the QLCT domain");
    f->add_option("--spec", spec_path, "transform spec file")->required();
    f->add_option("input", in_path)->required();
    f->add_option("output", out_path)->required();
    f->add_option("--band", band, "fractional passband 1/k, e.g. 1/4 or 1/6");
    f->add_option("--transfer", transfer_path, "QFLD transfer function instead of --band");
    f->add_flag("--doubled-params", doubled, "read the output back under the hat matrices");
    f->add_option("--noise-sigma", noise_sigma, "add Gaussian noise before filtering");
    f->add_option("--noise-snr", noise_snr, "choose sigma to hit this input SNR (dB)");
    f->add_option("--seed", seed, "noise seed");

    auto* v = app.add_subcommand("verify", "run the theorem verification suite");
    v->add_option("--size", size, "grid size (default 16)");
    v->add_option("--seed", seed, "field seed");
    v->add_option("--tol", tol_scale, "tolerance scale factor (1 = spec tolerances)");
    v->add_flag("--include-general", include_general, "add the O(N^4) two-axis theorem");

    auto* s = app.add_subcommand("solve", "fredholm | mixed | elliptic | anisotropic | spectral");
    s->add_option("kind", kind)->required();
    s->add_option("input", in_path, "right-hand side (QFLD; spectral datum for 'mixed')")->required();
    s->add_option("output", out_path)->required();
    s->add_option("--spec", spec_path, "transform spec file")->required();
    s->add_option("--kernel", kernel_path, "kernel field r for fredholm");

    auto* c = app.add_subcommand("convert", "convert between image and QFLD formats");
    c->add_option("input", in_path)->required();
    c->add_option("output", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return cmd_transform(spec_path, in_path, out_path, inverse, oracle);
        if (f->parsed())
            return cmd_filter(spec_path, in_path, out_path, band, transfer_path, doubled, noise_sigma, noise_snr,
                              seed);
        if (v->parsed()) return cmd_verify(size, seed, tol_scale, include_general);
        if (s->parsed()) return cmd_solve(kind, spec_path, in_path, kernel_path, out_path);
        if (c->parsed()) return cmd_convert(in_path, out_path);
    } catch (const SingularSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
