#include "qlct/convolution.hpp"

#include <cmath>

#include "internal.hpp"

namespace qlct {

using detail::Frame;
using detail::sgn;

static constexpr double kPi = 3.14159265358979323846;

Quaternion weight_w(const ParamMatrix& A, const UnitPureImaginary& mu, double t, double tau) {
    if (A.degenerate()) throw DegenerateB("weight_w: b = 0");
    return unit_exp(mu, tau * (tau - t) * A.a / A.b - sgn(A.b) * kPi / 4.0) / std::sqrt(2.0 * kPi * std::abs(A.b));
}

Quaternion weight_e(const ParamMatrix& A, const UnitPureImaginary& mu, double x, double tau) {
    if (A.degenerate()) throw DegenerateB("weight_e: b = 0");
    return unit_exp(mu, -tau * x * A.a / A.b + sgn(A.b) * kPi / 4.0) / std::sqrt(2.0 * kPi * std::abs(A.b));
}

GridSpec2D padded_spec(const GridSpec2D& in) {
    return {2 * in.nx + 1, 2 * in.ny + 1, in.dx, in.dy, true};
}

namespace {

void require_same(const Field2D& f, const Field2D& g, const char* what) {
    if (!(f.spec == g.spec)) throw GridMismatch(std::string(what) + ": operands on different grids");
}

// Index of the sample at coordinate (x_p - x_i) in the unpadded grid, or -1.
// Padded index p has coordinate (p - n) d; unpadded i has (i - o) d.
inline int shift_index(int p, int i, int n, int o) {
    const int j = p - n - i + 2 * o;
    return (j >= 0 && j < n) ? j : -1;
}

// Index of the sample at coordinate -(x_i), or -1 (lost boundary row on even grids).
inline int neg_index(int i, int n, int o) {
    const int j = 2 * o - i;
    return (j >= 0 && j < n) ? j : -1;
}

}  // namespace

Field2D classical_convolve(const Field2D& f, const Field2D& g) {
    require_same(f, g, "classical_convolve");
    const GridSpec2D& in = f.spec;
    Field2D out(padded_spec(in));
    const double area = in.cell_area();
    const int ox = in.nx / 2, oy = in.ny / 2;
    detail::parallel_for(out.spec.nx, [&](int p) {
        for (int q = 0; q < out.spec.ny; ++q) {
            Quaternion acc;
            for (int i = 0; i < in.nx; ++i) {
                const int fi = shift_index(p, i, in.nx, ox);
                if (fi < 0) continue;
                for (int j = 0; j < in.ny; ++j) {
                    const int fj = shift_index(q, j, in.ny, oy);
                    if (fj < 0) continue;
                    acc += f.at(fi, fj) * g.at(i, j);
                }
            }
            out.at(p, q) = acc * area;
        }
    });
    return out;
}

Field2D spatial_convolve(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    require_same(f, g, "spatial_convolve");
    if (spec.A1.degenerate() || spec.A2.degenerate()) throw DegenerateB("spatial_convolve: b = 0");
    const GridSpec2D& in = f.spec;
    Field2D out(padded_spec(in));
    const double area = in.cell_area();
    const int ox = in.nx / 2, oy = in.ny / 2;
    detail::parallel_for(out.spec.nx, [&](int p) {
        const double x = out.spec.x(p);
        for (int q = 0; q < out.spec.ny; ++q) {
            const double y = out.spec.y(q);
            Quaternion acc;
            for (int i = 0; i < in.nx; ++i) {
                const int gi = shift_index(p, i, in.nx, ox);
                if (gi < 0) continue;
                const Quaternion w1 = weight_w(spec.A1, spec.mu, x, in.x(i));
                for (int j = 0; j < in.ny; ++j) {
                    const int gj = shift_index(q, j, in.ny, oy);
                    if (gj < 0) continue;
                    const Quaternion w2 = weight_w(spec.A2, spec.nu, y, in.y(j));
                    acc += w1 * f.at(i, j) * g.at(gi, gj) * w2;
                }
            }
            out.at(p, q) = acc * area;
        }
    });
    return out;
}

Field2D spectral_convolve(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    require_same(f, g, "spectral_convolve");
    if (spec.axis_relation() != AxisRelation::Parallel)
        throw NonOrthogonalAxes("spectral_convolve: defined for nu = mu");
    const Field2D F = qlct_forward_fast(f, spec);
    const Field2D G = qlct_forward_fast(g, spec);
    return qlct_inverse_fast(pointwise_mul(F, G), spec);
}

// ---- four-term spatial representation of (star) -----------------------------
//
// With f = f_a + f_b nu', g = g_a + g_b nu' (slice planes in H(mu)), the product
// L[f] L[g] splits into four component products; each is an inverse transform of
// a phase-corrected transform of one weighted spatial convolution integral:
//   C1 = sum W1(x,t1)  f_a(x-t1, y-t2) g_a(t1,t2)        W2(y,t2)
//   C2 = sum E1(x,t1)  f_b(x-t1, y-t2) conj(g_a)(-t1,t2) conj(W2)(y,t2)   [. nu']
//   C3 = sum W1(x,t1)  f_a(x-t1, y+t2) g_b(t1,t2)        conj(W2)(y+t2,t2) [. nu']
//   C4 = sum E1(x,t1)  f_b(x-t1,-y+t2) conj(g_b)(-t1,t2) conj(W2)(t2,y)
// The C3 integrand differs from the printed source of this operator, whose
// third term does not reproduce L[f_a] L^{mu,-mu}[g_b]; the form above does.

namespace {

struct SliceTermSpec {
    // component selectors: 0 = f_a/g_a, 1 = f_b/g_b
    int fcomp, gcomp;
    bool conj_g;
    bool e_weight_left;   // E1 instead of W1
    bool reflect_g_t1;    // g component sampled at (-t1, t2)
    int f_y_mode;         // 0: y - t2, 1: y + t2, 2: -y + t2
    int w2_mode;          // 0: W2(y,t2), 1: conj W2(y,t2), 2: conj W2(y+t2,t2), 3: conj W2(t2,y)
    int outer_s2;         // sign of the right kernel of the outer transform
    double phase1, phase2;  // e^{mu(phase1*d1 u^2/(2 b1) + phase2*d2 v^2/(2 b2))}
    bool tail_nu;
    double scale;
};

}  // namespace

Field2D spectral_convolve_spatial_form(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    require_same(f, g, "spectral_convolve_spatial_form");
    if (spec.axis_relation() != AxisRelation::Parallel)
        throw NonOrthogonalAxes("spectral_convolve_spatial_form: defined for nu = mu");
    if (spec.A1.degenerate() || spec.A2.degenerate()) throw DegenerateB("spectral_convolve_spatial_form: b = 0");

    const Frame fr = detail::frame_for(spec.mu, spec.nu);
    detail::SliceField fa_p, fb_p, ga_p, gb_p;
    detail::split_planes(f, fr, fa_p, fb_p);
    detail::split_planes(g, fr, ga_p, gb_p);
    // Keep the components as slice-valued quaternion fields; the term sums are
    // genuine quaternion products so the operand order stays the written one.
    const auto embed = [&](const detail::SliceField& s) {
        Field2D out(s.spec);
        for (std::size_t k = 0; k < s.v.size(); ++k)
            out.samples[k] = SliceComplex(s.v[k].real(), s.v[k].imag()).embed(fr.mu);
        return out;
    };
    const Field2D comps_f[2] = {embed(fa_p), embed(fb_p)};
    const Field2D comps_g[2] = {embed(ga_p), embed(gb_p)};

    const GridSpec2D& in = f.spec;
    const GridSpec2D pad = padded_spec(in);
    const int ox = in.nx / 2, oy = in.ny / 2;
    const double area = in.cell_area();
    const UnitPureImaginary& mu = fr.mu;

    const SliceTermSpec terms[4] = {
        {0, 0, false, false, false, 0, 0, +1, +1.0, +1.0, false, +1.0},
        {1, 0, true, true, true, 0, 1, -1, -1.0, -1.0, true, +1.0},
        {0, 1, false, false, false, 1, 2, +1, +1.0, -1.0, true, +1.0},
        {1, 1, true, true, true, 2, 3, +1, -1.0, -1.0, false, -1.0},
    };

    Field2D result(in);
    for (const SliceTermSpec& t : terms) {
        const Field2D& fc = comps_f[t.fcomp];
        const Field2D& gc = comps_g[t.gcomp];
        Field2D term(pad);
        detail::parallel_for(pad.nx, [&](int p) {
            const double x = pad.x(p);
            for (int q = 0; q < pad.ny; ++q) {
                const double y = pad.y(q);
                Quaternion acc;
                for (int i = 0; i < in.nx; ++i) {
                    const int fi = shift_index(p, i, in.nx, ox);
                    if (fi < 0) continue;
                    const int gi = t.reflect_g_t1 ? neg_index(i, in.nx, ox) : i;
                    if (gi < 0) continue;
                    const double t1 = in.x(i);
                    const Quaternion w1 =
                        t.e_weight_left ? weight_e(spec.A1, mu, x, t1) : weight_w(spec.A1, mu, x, t1);
                    for (int j = 0; j < in.ny; ++j) {
                        const double t2 = in.y(j);
                        int fj = -1;
                        switch (t.f_y_mode) {
                            case 0: fj = shift_index(q, j, in.ny, oy); break;
                            case 1: fj = q - pad.ny / 2 + j; break;         // y + t2
                            case 2: fj = j - (q - pad.ny / 2); break;        // -y + t2
                        }
                        if (fj < 0 || fj >= in.ny) continue;
                        Quaternion w2;
                        switch (t.w2_mode) {
                            case 0: w2 = weight_w(spec.A2, mu, y, t2); break;
                            case 1: w2 = conjugate(weight_w(spec.A2, mu, y, t2)); break;
                            case 2: w2 = conjugate(weight_w(spec.A2, mu, y + t2, t2)); break;
                            case 3: w2 = conjugate(weight_w(spec.A2, mu, t2, y)); break;
                        }
                        Quaternion gval = gc.at(gi, j);
                        if (t.conj_g) gval = conjugate(gval);
                        acc += w1 * fc.at(fi, fj) * gval * w2;
                    }
                }
                term.at(p, q) = acc * (area * t.scale);
            }
        });

        // Spectral phase correction, optional nu' tail, then back to the input grid.
        const TransformSpec outer =
            t.outer_s2 > 0 ? spec : spec.with_nu_negated();
        Field2D spect = qlct_forward_direct(term, outer, conjugate_grid(in, spec.A1, spec.A2));
        for (int k = 0; k < spect.spec.nx; ++k) {
            const double u = spect.spec.x(k);
            for (int l = 0; l < spect.spec.ny; ++l) {
                const double v = spect.spec.y(l);
                const Quaternion ph = unit_exp(mu, t.phase1 * spec.A1.d * u * u / (2.0 * spec.A1.b) +
                                                       t.phase2 * spec.A2.d * v * v / (2.0 * spec.A2.b));
                Quaternion val = ph * spect.at(k, l);
                if (t.tail_nu) val = val * fr.nu.q();
                spect.at(k, l) = val;
            }
        }
        result = result + qlct_inverse_fast(spect, spec);
    }
    return result;
}

Field2D correlate_spatial(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    return spatial_convolve(conj_field(reflect_field(f)), g, spec);
}

Field2D correlate_spectral(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    return spectral_convolve(f, conj_field(reflect_field(g)), spec);
}

}  // namespace qlct
