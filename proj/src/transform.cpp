#include "qlct/transform.hpp"

#include <cmath>

#include "fft.hpp"
#include "internal.hpp"

namespace qlct {

using detail::cplx;
using detail::Frame;
using detail::sgn;
using detail::SliceField;

static constexpr double kPi = 3.14159265358979323846;

Quaternion kernel_eval(const ParamMatrix& A, const UnitPureImaginary& mu, double x, double u) {
    if (A.degenerate()) throw DegenerateB("kernel_eval: b = 0");
    const double phase = A.a * x * x / (2.0 * A.b) - x * u / A.b + A.d * u * u / (2.0 * A.b);
    return unit_exp(mu, phase - sgn(A.b) * kPi / 4.0) / std::sqrt(2.0 * kPi * std::abs(A.b));
}

GridSpec2D conjugate_grid(const GridSpec2D& in, const ParamMatrix& A1, const ParamMatrix& A2) {
    if (A1.degenerate() || A2.degenerate()) throw DegenerateB("conjugate_grid: b = 0");
    const double du = 2.0 * kPi * std::abs(A1.b) / (in.nx * in.dx);
    const double dv = 2.0 * kPi * std::abs(A2.b) / (in.ny * in.dy);
    return {in.nx, in.ny, du, dv, true};
}

// ---- direct oracle ----------------------------------------------------------

Field2D qlct_forward_direct(const Field2D& f, const TransformSpec& spec, const GridSpec2D& out_grid) {
    if (spec.A1.degenerate() || spec.A2.degenerate())
        throw DegenerateB("qlct_forward_direct: b = 0; use qlct_degenerate");
    Field2D out(out_grid);
    const GridSpec2D& in = f.spec;
    const double area = in.cell_area();
    detail::parallel_for(out_grid.nx, [&](int k) {
        const double u = out_grid.x(k);
        for (int l = 0; l < out_grid.ny; ++l) {
            const double v = out_grid.y(l);
            Quaternion acc;
            for (int i = 0; i < in.nx; ++i) {
                const Quaternion k1 = kernel_eval(spec.A1, spec.mu, in.x(i), u);
                for (int j = 0; j < in.ny; ++j) {
                    const Quaternion k2 = kernel_eval(spec.A2, spec.nu, in.y(j), v);
                    acc += k1 * f.at(i, j) * k2;
                }
            }
            out.at(k, l) = acc * area;
        }
    });
    return out;
}

Field2D qlct_inverse_direct(const Field2D& F, const TransformSpec& spec, const GridSpec2D& out_grid) {
    return qlct_forward_direct(F, spec.inverse(), out_grid);
}

// ---- fast path --------------------------------------------------------------

namespace {

// One axis pass of the complex chirp transform on the canonical conjugate grid:
//   out_k = C e^{s i d u_k^2/(2b)} sum_m e^{-s i x_m u_k / b} e^{s i a x_m^2/(2b)} h_m dx
// with x_m = (m - o) dx, u_k = (k - o) du, du = 2 pi |b| /(n dx). The cross
// phase splits as (m-o)(k-o) = mk - m o - o k + o^2, turning the sum into a
// plain DFT with pre/post modulations.
struct AxisPass {
    int n;
    double sign_dft;  // sigma = s * sgn(b); DFT kernel e^{-sigma 2 pi i mk/n}
    std::vector<cplx> pre, post;

    AxisPass(int n_, double d_in, const ParamMatrix& A, int s) : n(n_), pre(n_), post(n_) {
        const int o = n / 2;
        const double sigma = s * sgn(A.b);
        sign_dft = sigma;
        const double du = 2.0 * kPi * std::abs(A.b) / (n * d_in);
        const cplx unit_c = std::polar(1.0, -s * sgn(A.b) * kPi / 4.0);
        const double c0 = d_in / std::sqrt(2.0 * kPi * std::abs(A.b));
        for (int m = 0; m < n; ++m) {
            const double x = (m - o) * d_in;
            pre[m] = std::polar(1.0, s * A.a * x * x / (2.0 * A.b) + sigma * 2.0 * kPi * m * o / n);
        }
        for (int k = 0; k < n; ++k) {
            const double u = (k - o) * du;
            post[k] = c0 * unit_c *
                      std::polar(1.0, sigma * 2.0 * kPi * o * k / n - sigma * 2.0 * kPi * o * o / n +
                                          s * A.d * u * u / (2.0 * A.b));
        }
    }
};

// Full complex 2-D chirp transform; s1, s2 are the exponential signs of the
// left and right kernels in the mu-slice plane.
SliceField clct2d(const SliceField& h, const ParamMatrix& A1, const ParamMatrix& A2, int s1, int s2) {
    const int nx = h.spec.nx, ny = h.spec.ny;
    SliceField out = h;

    const AxisPass py(ny, h.spec.dy, A2, s2);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) out.at(i, j) *= py.pre[j];
    detail::dft_rows(out.v.data(), ny, nx, py.sign_dft > 0 ? -1 : +1);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) out.at(i, j) *= py.post[j];

    const AxisPass px(nx, h.spec.dx, A1, s1);
    std::vector<cplx> col(nx);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) col[i] = out.at(i, j) * px.pre[i];
        detail::dft_rows(col.data(), nx, 1, px.sign_dft > 0 ? -1 : +1);
        for (int i = 0; i < nx; ++i) out.at(i, j) = col[i] * px.post[i];
    }
    out.spec = conjugate_grid(h.spec, A1, A2);
    return out;
}

SliceField combine(const SliceField& p, const SliceField& m, cplx cp, cplx cm) {
    SliceField out(p.spec);
    for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] = cp * p.v[k] + cm * m.v[k];
    return out;
}

}  // namespace

Field2D qlct_forward_fast(const Field2D& f, const TransformSpec& spec) {
    if (spec.A1.degenerate() || spec.A2.degenerate())
        throw DegenerateB("qlct_forward_fast: b = 0; use qlct_degenerate");
    const AxisRelation rel = spec.axis_relation();
    const Frame fr = detail::frame_for(spec.mu, rel == AxisRelation::Perpendicular ? spec.nu : spec.mu);
    SliceField a, b;
    detail::split_planes(f, fr, a, b);

    if (rel != AxisRelation::Perpendicular) {
        // L^{mu, eps*mu}[A + B nu'] = clct(A; +, eps) + clct(B; +, -eps) nu'
        const int eps = rel == AxisRelation::Parallel ? +1 : -1;
        const SliceField fa = clct2d(a, spec.A1, spec.A2, +1, eps);
        const SliceField fb = clct2d(b, spec.A1, spec.A2, +1, -eps);
        return detail::assemble_planes(fa, fb, fr);
    }

    // Perpendicular axes: the right kernel K2^nu = c + nu s with real c, s mixes
    // the planes; build both from the +/- mu-slice transforms.
    const SliceField pa = clct2d(a, spec.A1, spec.A2, +1, +1);
    const SliceField ma = clct2d(a, spec.A1, spec.A2, +1, -1);
    const SliceField pb = clct2d(b, spec.A1, spec.A2, +1, +1);
    const SliceField mb = clct2d(b, spec.A1, spec.A2, +1, -1);
    const cplx half(0.5, 0.0), half_over_i(0.0, -0.5);  // 1/(2i)
    SliceField fa = combine(pa, ma, half, half);        // (Pa+Ma)/2
    SliceField fb = combine(pa, ma, half_over_i, -half_over_i);  // (Pa-Ma)/(2i)
    for (std::size_t k = 0; k < fa.v.size(); ++k) {
        fa.v[k] -= half_over_i * (pb.v[k] - mb.v[k]);  // -(Pb-Mb)/(2i)
        fb.v[k] += half * (pb.v[k] + mb.v[k]);         // +(Pb+Mb)/2
    }
    return detail::assemble_planes(fa, fb, fr);
}

Field2D qlct_inverse_fast(const Field2D& F, const TransformSpec& spec) {
    return qlct_forward_fast(F, spec.inverse());
}

// ---- degenerate branches ----------------------------------------------------

namespace {

int nearest_index(const GridSpec2D& g, double x, bool axis_x) {
    const int n = axis_x ? g.nx : g.ny;
    const double d = axis_x ? g.dx : g.dy;
    const int o = g.centered ? n / 2 : 0;
    const int i = static_cast<int>(std::lround(x / d)) + o;
    return (i >= 0 && i < n) ? i : -1;
}

}  // namespace

Field2D qlct_degenerate(const Field2D& f, const TransformSpec& spec) {
    const bool deg1 = spec.A1.degenerate(), deg2 = spec.A2.degenerate();
    if (!deg1 && !deg2) throw InvalidDegenerate("qlct_degenerate: neither axis has b = 0");
    if ((deg1 && spec.A1.d <= 0.0) || (deg2 && spec.A2.d <= 0.0))
        throw InvalidDegenerate("qlct_degenerate: degenerate axis needs d > 0");

    const GridSpec2D& in = f.spec;
    GridSpec2D out_grid = in;
    if (!deg2) out_grid = GridSpec2D(in.nx, in.ny, in.dx, conjugate_grid(in, ParamMatrix::fourier(), spec.A2).dy,
                                     in.centered);
    if (!deg1) out_grid = GridSpec2D(in.nx, in.ny, conjugate_grid(in, spec.A1, ParamMatrix::fourier()).dx, in.dy,
                                     in.centered);

    Field2D out(out_grid);
    const double s1 = deg1 ? std::sqrt(spec.A1.d) : 1.0;
    const double s2 = deg2 ? std::sqrt(spec.A2.d) : 1.0;

    for (int k = 0; k < out_grid.nx; ++k) {
        const double u = out_grid.x(k);
        for (int l = 0; l < out_grid.ny; ++l) {
            const double v = out_grid.y(l);
            Quaternion acc;
            if (deg1 && deg2) {
                const int i = nearest_index(in, spec.A1.d * u, true);
                const int j = nearest_index(in, spec.A2.d * v, false);
                if (i >= 0 && j >= 0) acc = f.at(i, j);
            } else if (deg1) {
                const int i = nearest_index(in, spec.A1.d * u, true);
                if (i >= 0) {
                    for (int j = 0; j < in.ny; ++j) acc += f.at(i, j) * kernel_eval(spec.A2, spec.nu, in.y(j), v);
                    acc *= in.dy;
                }
            } else {
                const int j = nearest_index(in, spec.A2.d * v, false);
                if (j >= 0) {
                    for (int i = 0; i < in.nx; ++i) acc += kernel_eval(spec.A1, spec.mu, in.x(i), u) * f.at(i, j);
                    acc *= in.dx;
                }
            }
            Quaternion val = acc;
            if (deg1) val = (unit_exp(spec.mu, spec.A1.c * spec.A1.d * u * u / 2.0) * s1) * val;
            if (deg2) val = val * (unit_exp(spec.nu, spec.A2.c * spec.A2.d * v * v / 2.0) * s2);
            out.at(k, l) = val;
        }
    }
    return out;
}

// ---- QFT --------------------------------------------------------------------

namespace {

// L at A = (0,1;-1,0) equals sigma_mu * QFT * sigma_nu with
// sigma = e^{-axis pi/4}/sqrt(2 pi); strip the constants to get Eq.-(776) form.
Field2D strip_qft_constants(Field2D F, const UnitPureImaginary& mu, const UnitPureImaginary& nu, bool forward) {
    const double r = std::sqrt(2.0 * kPi);
    const double ang = forward ? kPi / 4.0 : -kPi / 4.0;
    const Quaternion lc = unit_exp(mu, ang) * r;
    const Quaternion rc = unit_exp(nu, ang) * r;
    for (auto& q : F.samples) q = lc * q * rc;
    return F;
}

}  // namespace

Field2D qft(const Field2D& f, const UnitPureImaginary& mu, const UnitPureImaginary& nu) {
    const TransformSpec spec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, nu);
    return strip_qft_constants(qlct_forward_fast(f, spec), mu, nu, true);
}

Field2D qft_inverse(const Field2D& F, const UnitPureImaginary& mu, const UnitPureImaginary& nu) {
    const TransformSpec spec(ParamMatrix::fourier(), ParamMatrix::fourier(), mu, nu);
    // QFT^{-1} = sigma_mu L^{-1}[ sigma_mu^{-1} . sigma_nu^{-1} ] sigma_nu reduces to
    // attaching the same constants around the fast inverse.
    const double r = 1.0 / std::sqrt(2.0 * kPi);
    const Quaternion lc = unit_exp(mu, -kPi / 4.0) * r;
    const Quaternion rc = unit_exp(nu, -kPi / 4.0) * r;
    Field2D scaled(F.spec);
    for (std::size_t k = 0; k < F.samples.size(); ++k) scaled.samples[k] = lc * F.samples[k] * rc;
    return qlct_inverse_fast(scaled, spec);
}

double fast_vs_direct_deviation(const Field2D& f, const TransformSpec& spec) {
    const Field2D fast = qlct_forward_fast(f, spec);
    const Field2D direct = qlct_forward_direct(f, spec, fast.spec);
    return rel_frobenius(direct, fast);
}

}  // namespace qlct
