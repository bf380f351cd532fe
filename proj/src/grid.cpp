#include "qlct/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "internal.hpp"

namespace qlct {

Quaternion integrate(const Field2D& f) {
    Quaternion acc;
    for (const auto& q : f.samples) acc += q;
    return acc * f.spec.cell_area();
}

double lp_norm(const Field2D& f, double p) {
    if (p < 1.0) throw InvalidExponent("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (const auto& q : f.samples) acc += std::pow(modulus(q), p);
    return std::pow(acc * f.spec.cell_area(), 1.0 / p);
}

Field2D delta_field(const GridSpec2D& spec) {
    Field2D out(spec);
    const int i0 = spec.centered ? spec.nx / 2 : 0;
    const int j0 = spec.centered ? spec.ny / 2 : 0;
    if (spec.x(i0) != 0.0 || spec.y(j0) != 0.0) throw OriginNotOnGrid("delta_field: origin not on grid");
    out.at(i0, j0) = Quaternion::real(1.0 / spec.cell_area());
    return out;
}

static void check_same_spec(const Field2D& a, const Field2D& b, const char* what) {
    if (!(a.spec == b.spec)) throw GridMismatch(std::string(what) + ": grid specs differ");
}

Field2D operator+(const Field2D& a, const Field2D& b) {
    check_same_spec(a, b, "field add");
    Field2D out(a.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = a.samples[n] + b.samples[n];
    return out;
}

Field2D operator-(const Field2D& a, const Field2D& b) {
    check_same_spec(a, b, "field sub");
    Field2D out(a.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = a.samples[n] - b.samples[n];
    return out;
}

Field2D scale(const Field2D& f, double s) {
    Field2D out(f.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = f.samples[n] * s;
    return out;
}

Field2D left_mul(const Quaternion& q, const Field2D& f) {
    Field2D out(f.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = q * f.samples[n];
    return out;
}

Field2D right_mul(const Field2D& f, const Quaternion& q) {
    Field2D out(f.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = f.samples[n] * q;
    return out;
}

Field2D pointwise_mul(const Field2D& a, const Field2D& b) {
    check_same_spec(a, b, "pointwise mul");
    Field2D out(a.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = a.samples[n] * b.samples[n];
    return out;
}

Field2D conj_field(const Field2D& f) {
    Field2D out(f.spec);
    for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] = conjugate(f.samples[n]);
    return out;
}

Field2D reflect_field(const Field2D& f) {
    Field2D out(f.spec);
    const int ox = f.spec.centered ? f.spec.nx / 2 : 0;
    const int oy = f.spec.centered ? f.spec.ny / 2 : 0;
    for (int i = 0; i < f.spec.nx; ++i) {
        const int ii = 2 * ox - i;
        if (ii < 0 || ii >= f.spec.nx) continue;
        for (int j = 0; j < f.spec.ny; ++j) {
            const int jj = 2 * oy - j;
            if (jj < 0 || jj >= f.spec.ny) continue;
            out.at(i, j) = f.at(ii, jj);
        }
    }
    return out;
}

double rel_frobenius(const Field2D& a, const Field2D& b) {
    check_same_spec(a, b, "rel_frobenius");
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < a.samples.size(); ++n) {
        num += norm_sq(a.samples[n] - b.samples[n]);
        den += norm_sq(a.samples[n]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double rel_max_dev(const Field2D& a, const Field2D& b) {
    check_same_spec(a, b, "rel_max_dev");
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < a.samples.size(); ++n) {
        num = std::max(num, modulus(a.samples[n] - b.samples[n]));
        den = std::max(den, modulus(a.samples[n]));
    }
    return num / std::max(den, 1e-300);
}

Field2D random_field(const GridSpec2D& spec, std::uint64_t seed, FieldKind kind) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    Field2D out(spec);

    const bool slice = (kind == FieldKind::IidSlice || kind == FieldKind::SmoothSlice);
    if (kind == FieldKind::Iid || kind == FieldKind::IidSlice) {
        for (auto& q : out.samples) {
            q.w = nd(rng);
            q.x = nd(rng);
            if (!slice) {
                q.y = nd(rng);
                q.z = nd(rng);
            }
        }
        return out;
    }

    // Smooth kinds: random quadratic per component under a Gaussian envelope
    // sized so the outermost samples are ~1e-11 of the peak.
    const double half_x = spec.nx / 2 * spec.dx;
    const double half_y = spec.ny / 2 * spec.dy;
    const double r2max = half_x * half_x + half_y * half_y;
    const double alpha = 25.0 / r2max;
    double coef[4][6];
    const int ncomp = slice ? 2 : 4;
    for (int c = 0; c < ncomp; ++c)
        for (double& cc : coef[c]) cc = nd(rng);
    for (int i = 0; i < spec.nx; ++i) {
        const double x = spec.x(i);
        for (int j = 0; j < spec.ny; ++j) {
            const double y = spec.y(j);
            const bool edge = (i == 0 || j == 0 || i == spec.nx - 1 || j == spec.ny - 1);
            const double env = edge ? 0.0 : std::exp(-alpha * (x * x + y * y));
            double comp[4] = {0, 0, 0, 0};
            for (int c = 0; c < ncomp; ++c) {
                const double* k = coef[c];
                comp[c] = env * (k[0] + k[1] * x + k[2] * y + k[3] * x * y + 0.5 * k[4] * x * x + 0.5 * k[5] * y * y);
            }
            out.at(i, j) = {comp[0], comp[1], comp[2], comp[3]};
        }
    }
    return out;
}

}  // namespace qlct

namespace qlct::detail {

Frame frame_for(const UnitPureImaginary& mu, const UnitPureImaginary& nu) {
    if (mu.orthogonal_to(nu)) return {mu, nu};
    // nu parallel to mu: complete with the canonical axis least aligned with mu.
    const auto m = mu.vec();
    const double mags[3] = {std::abs(m[0]), std::abs(m[1]), std::abs(m[2])};
    int pick = 0;
    if (mags[1] < mags[pick]) pick = 1;
    if (mags[2] < mags[pick]) pick = 2;
    double e[3] = {0, 0, 0};
    e[pick] = 1.0;
    const double d = e[0] * m[0] + e[1] * m[1] + e[2] * m[2];
    double p[3] = {e[0] - d * m[0], e[1] - d * m[1], e[2] - d * m[2]};
    const double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return {mu, UnitPureImaginary({0.0, p[0] / nrm, p[1] / nrm, p[2] / nrm})};
}

void split_planes(const Field2D& f, const Frame& fr, SliceField& a, SliceField& b) {
    a = SliceField(f.spec);
    b = SliceField(f.spec);
    const auto m = fr.mu.vec(), n = fr.nu.vec(), e = fr.eta.vec();
    for (std::size_t k = 0; k < f.samples.size(); ++k) {
        const Quaternion& q = f.samples[k];
        a.v[k] = {q.w, q.x * m[0] + q.y * m[1] + q.z * m[2]};
        b.v[k] = {q.x * n[0] + q.y * n[1] + q.z * n[2], q.x * e[0] + q.y * e[1] + q.z * e[2]};
    }
}

Field2D assemble_planes(const SliceField& a, const SliceField& b, const Frame& fr) {
    Field2D out(a.spec);
    const auto m = fr.mu.vec(), n = fr.nu.vec(), e = fr.eta.vec();
    for (std::size_t k = 0; k < out.samples.size(); ++k) {
        const double am = a.v[k].imag(), bn = b.v[k].real(), be = b.v[k].imag();
        out.samples[k] = {a.v[k].real(), am * m[0] + bn * n[0] + be * e[0], am * m[1] + bn * n[1] + be * e[1],
                          am * m[2] + bn * n[2] + be * e[2]};
    }
    return out;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QLCT_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) threads = t;
    }
    threads = std::clamp(threads, 1, 8);
    if (threads == 1 || n < 4) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qlct::detail
