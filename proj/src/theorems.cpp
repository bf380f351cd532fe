#include "qlct/theorems.hpp"

#include <cmath>
#include <sstream>

#include "internal.hpp"

namespace qlct {

using detail::Frame;

std::string TheoremReport::to_line() const {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "theorem=" << theorem << " max_rel=" << max_rel << " at=(" << at_i << "," << at_j
       << ") mean_rel=" << mean_rel << " tol=" << tol << " pass=" << (pass ? "true" : "false");
    return os.str();
}

namespace {

struct Deviation {
    double max_rel = 0.0;
    int i = 0, j = 0;
    double mean_rel = 0.0;
};

Deviation measure(const Field2D& lhs, const Field2D& rhs) {
    double peak = 1e-300;
    for (const auto& q : lhs.samples) peak = std::max(peak, modulus(q));
    Deviation d;
    double sum = 0.0;
    for (int i = 0; i < lhs.spec.nx; ++i)
        for (int j = 0; j < lhs.spec.ny; ++j) {
            const double dev = modulus(lhs.at(i, j) - rhs.at(i, j)) / peak;
            sum += dev;
            if (dev > d.max_rel) {
                d.max_rel = dev;
                d.i = i;
                d.j = j;
            }
        }
    d.mean_rel = sum / static_cast<double>(lhs.spec.size());
    return d;
}

TheoremReport make_report(const std::string& name, std::initializer_list<Deviation> devs, double tol) {
    TheoremReport r;
    r.theorem = name;
    r.tol = tol;
    r.pass = true;
    for (const Deviation& d : devs) {
        if (d.max_rel > r.max_rel) {
            r.max_rel = d.max_rel;
            r.at_i = d.i;
            r.at_j = d.j;
        }
        r.mean_rel = std::max(r.mean_rel, d.mean_rel);
        if (d.max_rel > tol) r.pass = false;
    }
    return r;
}

void require_slice(const Field2D& f, const UnitPureImaginary& mu, const char* what) {
    const auto m = mu.vec();
    double peak = 1e-300, worst = 0.0;
    for (const auto& q : f.samples) {
        peak = std::max(peak, modulus(q));
        const double along = q.x * m[0] + q.y * m[1] + q.z * m[2];
        const double perp2 = (q.x * q.x + q.y * q.y + q.z * q.z) - along * along;
        worst = std::max(worst, perp2);
    }
    if (std::sqrt(std::max(worst, 0.0)) > 1e-10 * peak)
        throw NotSliceValued(std::string(what) + ": field has components off the mu slice");
}

void require_parallel(const TransformSpec& spec, const char* what) {
    if (spec.axis_relation() != AxisRelation::Parallel)
        throw NonOrthogonalAxes(std::string(what) + ": needs nu = mu");
}

/// e^{mu(c1*d1*u^2/(2 b1) + c2*d2*v^2/(2 b2))} as a left multiplier field.
Field2D phase_field(const GridSpec2D& freq, const TransformSpec& spec, double c1, double c2) {
    Field2D out(freq);
    for (int k = 0; k < freq.nx; ++k) {
        const double u = freq.x(k);
        for (int l = 0; l < freq.ny; ++l) {
            const double v = freq.y(l);
            out.at(k, l) = unit_exp(spec.mu, c1 * spec.A1.d * u * u / (2.0 * spec.A1.b) +
                                                 c2 * spec.A2.d * v * v / (2.0 * spec.A2.b));
        }
    }
    return out;
}

/// Direct transform evaluated at the negated grid points: L[h](-u,-v).
Field2D direct_at_negated(const Field2D& h, const TransformSpec& spec, const GridSpec2D& freq) {
    Field2D out(freq);
    const double area = h.spec.cell_area();
    detail::parallel_for(freq.nx, [&](int k) {
        const double u = -freq.x(k);
        for (int l = 0; l < freq.ny; ++l) {
            const double v = -freq.y(l);
            Quaternion acc;
            for (int i = 0; i < h.spec.nx; ++i) {
                const Quaternion k1 = kernel_eval(spec.A1, spec.mu, h.spec.x(i), u);
                for (int j = 0; j < h.spec.ny; ++j)
                    acc += k1 * h.at(i, j) * kernel_eval(spec.A2, spec.nu, h.spec.y(j), v);
            }
            out.at(k, l) = acc * area;
        }
    });
    return out;
}

/// Slice planes of f embedded back as quaternion fields (values in H(mu)).
std::pair<Field2D, Field2D> components(const Field2D& f, const Frame& fr) {
    detail::SliceField a, b;
    detail::split_planes(f, fr, a, b);
    auto embed = [&](const detail::SliceField& s) {
        Field2D out(s.spec);
        for (std::size_t k = 0; k < s.v.size(); ++k)
            out.samples[k] = SliceComplex(s.v[k].real(), s.v[k].imag()).embed(fr.mu);
        return out;
    };
    return {embed(a), embed(b)};
}

/// Variant of the spatial convolution with the right weight conjugated; this is
/// the operation the product-theorem proof actually performs between the
/// L^{mu,-mu} factors (the statement reuses the plain (*) symbol for it).
Field2D spatial_convolve_conj_w2(const Field2D& f, const Field2D& g, const TransformSpec& spec) {
    if (!(f.spec == g.spec)) throw GridMismatch("spatial_convolve_conj_w2: operands on different grids");
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
                const int gi = p - in.nx - i + 2 * ox;
                if (gi < 0 || gi >= in.nx) continue;
                const Quaternion w1 = weight_w(spec.A1, spec.mu, x, in.x(i));
                for (int j = 0; j < in.ny; ++j) {
                    const int gj = q - in.ny - j + 2 * oy;
                    if (gj < 0 || gj >= in.ny) continue;
                    const Quaternion w2 = conjugate(weight_w(spec.A2, spec.nu, y, in.y(j)));
                    acc += w1 * f.at(i, j) * g.at(gi, gj) * w2;
                }
            }
            out.at(p, q) = acc * area;
        }
    });
    return out;
}

/// Chirp-sandwiched pointwise product e^{mu a1 x^2/(2b1)} f g e^{mu c2 a2 y^2/(2b2)}.
Field2D chirped_product(const Field2D& f, const Field2D& g, const TransformSpec& spec, double right_sign) {
    Field2D out(f.spec);
    for (int i = 0; i < f.spec.nx; ++i) {
        const Quaternion cl = unit_exp(spec.mu, spec.A1.a * f.spec.x(i) * f.spec.x(i) / (2.0 * spec.A1.b));
        for (int j = 0; j < f.spec.ny; ++j) {
            const Quaternion cr =
                unit_exp(spec.mu, right_sign * spec.A2.a * f.spec.y(j) * f.spec.y(j) / (2.0 * spec.A2.b));
            out.at(i, j) = cl * f.at(i, j) * g.at(i, j) * cr;
        }
    }
    return out;
}

}  // namespace

TheoremReport verify_conv_theorem_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol) {
    require_parallel(spec, "verify_conv_theorem_slice");
    require_slice(f, spec.mu, "verify_conv_theorem_slice");
    require_slice(g, spec.mu, "verify_conv_theorem_slice");

    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);
    const Field2D lhs = qlct_forward_direct(spatial_convolve(f, g, spec), spec, freq);

    const Field2D rhs1 = pointwise_mul(phase_field(freq, spec, -1.0, -1.0),
                                       pointwise_mul(qlct_forward_fast(f, spec), qlct_forward_fast(g, spec)));
    const TransformSpec tsp = spec.with_matrices(spec.A1.tilde(), spec.A2.tilde());
    const Field2D rhs2 = pointwise_mul(qlct_forward_fast(f, tsp), qlct_forward_fast(g, tsp));

    const Deviation d1 = measure(lhs, rhs1);
    const Deviation d2 = measure(lhs, rhs2);
    const Deviation d3 = measure(rhs1, rhs2);
    TheoremReport r = make_report("spatial-conv-slice", {d1, d2}, tol);
    if (d3.max_rel > 1e-10) r.pass = false;  // the two stated forms must coincide
    return r;
}

TheoremReport verify_conv_theorem_full(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol) {
    require_parallel(spec, "verify_conv_theorem_full");
    const Frame fr = detail::frame_for(spec.mu, spec.mu);
    const auto [fa, fb] = components(f, fr);
    const auto [ga, gb] = components(g, fr);

    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);
    const Field2D lhs = qlct_forward_direct(spatial_convolve(f, g, spec), spec, freq);

    const TransformSpec mn = spec.with_nu_negated();
    const Quaternion nu = fr.nu.q();

    auto rhs_for = [&](const TransformSpec& pp, const TransformSpec& pm, bool with_phases) {
        const Field2D t1 = pointwise_mul(qlct_forward_fast(fa, pp), qlct_forward_fast(ga, pp));
        const Field2D t2 = pointwise_mul(qlct_forward_fast(fb, pp), qlct_forward_fast(conj_field(gb), pp));
        const Field2D t3 = pointwise_mul(qlct_forward_fast(fb, pm), qlct_forward_fast(conj_field(ga), pm));
        const Field2D t4 = pointwise_mul(qlct_forward_fast(fa, pm), qlct_forward_fast(gb, pm));
        Field2D head = t1 - t2;
        Field2D tail = right_mul(t3 + t4, nu);
        if (with_phases) {
            head = pointwise_mul(phase_field(freq, spec, -1.0, -1.0), head);
            tail = pointwise_mul(phase_field(freq, spec, -1.0, +1.0), tail);
        }
        return head + tail;
    };

    const Deviation d1 = measure(lhs, rhs_for(spec, mn, true));
    const TransformSpec tpp = spec.with_matrices(spec.A1.tilde(), spec.A2.tilde());
    const TransformSpec tpm = tpp.with_nu_negated();
    const Deviation d2 = measure(lhs, rhs_for(tpp, tpm, false));
    return make_report("spatial-conv-full", {d1, d2}, tol);
}

TheoremReport verify_general_conv_theorem(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                          double tol) {
    if (spec.axis_relation() != AxisRelation::Perpendicular)
        throw NonOrthogonalAxes("verify_general_conv_theorem: needs nu perpendicular to mu");
    if (f.spec.nx > 24 || f.spec.ny > 24)
        throw Error("verify_general_conv_theorem: nested transform is O(N^4); use N <= 24");

    const Frame fr(spec.mu, spec.nu);
    // g = g1 + mu*g2 with g1, g2 in H(nu): g1 carries (w, nu), g2 carries (mu, eta).
    const auto m = fr.mu.vec(), n = fr.nu.vec(), e = fr.eta.vec();
    Field2D g1(g.spec), g2(g.spec);
    for (std::size_t k = 0; k < g.samples.size(); ++k) {
        const Quaternion& q = g.samples[k];
        const double qm = q.x * m[0] + q.y * m[1] + q.z * m[2];
        const double qn = q.x * n[0] + q.y * n[1] + q.z * n[2];
        const double qe = q.x * e[0] + q.y * e[1] + q.z * e[2];
        g1.samples[k] = Quaternion{q.w, 0, 0, 0} + SliceComplex(0.0, qn).embed(fr.nu);
        g2.samples[k] = Quaternion{qm, 0, 0, 0} + SliceComplex(0.0, qe).embed(fr.nu);
    }

    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);
    const Field2D lhs = qlct_forward_direct(spatial_convolve(f, g, spec), spec, freq);

    const Field2D Lf = qlct_forward_direct(f, spec, freq);
    const Field2D Lfmu = qlct_forward_direct(right_mul(f, spec.mu.q()), spec, freq);

    // Nested transform taken literally: the inner result is frozen at the outer
    // output point, OUT(u,v) = sum K1(s,u) [Q(u,v) g_i(s,t)] K2(t,v) ds dt.
    auto nested = [&](const Field2D& Q, const Field2D& gg) {
        Field2D out(freq);
        const double area = gg.spec.cell_area();
        detail::parallel_for(freq.nx, [&](int k) {
            const double u = freq.x(k);
            for (int l = 0; l < freq.ny; ++l) {
                const double v = freq.y(l);
                Quaternion acc;
                for (int i = 0; i < gg.spec.nx; ++i) {
                    const Quaternion k1 = kernel_eval(spec.A1, spec.mu, gg.spec.x(i), u);
                    for (int j = 0; j < gg.spec.ny; ++j)
                        acc += k1 * Q.at(k, l) * gg.at(i, j) * kernel_eval(spec.A2, spec.nu, gg.spec.y(j), v);
                }
                out.at(k, l) = acc * area;
            }
        });
        return out;
    };

    Field2D rhs = nested(Lf, g1) + nested(Lfmu, g2);
    for (int k = 0; k < freq.nx; ++k) {
        const Quaternion pl = unit_exp(spec.mu, -spec.A1.d * freq.x(k) * freq.x(k) / (2.0 * spec.A1.b));
        for (int l = 0; l < freq.ny; ++l) {
            const Quaternion pr = unit_exp(spec.nu, -spec.A2.d * freq.y(l) * freq.y(l) / (2.0 * spec.A2.b));
            rhs.at(k, l) = pl * rhs.at(k, l) * pr;
        }
    }
    return make_report("spatial-conv-general", {measure(lhs, rhs)}, tol);
}

TheoremReport verify_parseval(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol) {
    require_parallel(spec, "verify_parseval");
    require_slice(f, spec.mu, "verify_parseval");
    require_slice(g, spec.mu, "verify_parseval");

    // conj(r)(t1,t2) = e^{mu t1^2 a1/b1} g(-t1,-t2) e^{mu t2^2 a2/b2}
    Field2D rbar = reflect_field(g);
    for (int i = 0; i < rbar.spec.nx; ++i) {
        const double t1 = rbar.spec.x(i);
        const Quaternion c1 = unit_exp(spec.mu, spec.A1.a * t1 * t1 / spec.A1.b);
        for (int j = 0; j < rbar.spec.ny; ++j) {
            const double t2 = rbar.spec.y(j);
            rbar.at(i, j) = c1 * rbar.at(i, j) * unit_exp(spec.mu, spec.A2.a * t2 * t2 / spec.A2.b);
        }
    }
    const Quaternion lhs = integrate(pointwise_mul(f, rbar));

    const Field2D F = qlct_forward_fast(f, spec);
    const Field2D R = qlct_forward_fast(conj_field(rbar), spec);
    const Quaternion rhs = integrate(pointwise_mul(F, conj_field(R)));

    Deviation d;
    d.max_rel = modulus(lhs - rhs) / std::max(modulus(lhs), 1e-300);
    d.mean_rel = d.max_rel;

    // Energy identity (r = f): |f|_2 = |L f|_2.
    const double e1 = lp_norm(f, 2.0), e2 = lp_norm(F, 2.0);
    Deviation de;
    de.max_rel = std::abs(e1 - e2) / std::max(e1, 1e-300);
    de.mean_rel = de.max_rel;
    return make_report("parseval-energy", {d, de}, tol);
}

TheoremReport verify_product_theorem_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                           double tol) {
    require_parallel(spec, "verify_product_theorem_slice");
    require_slice(f, spec.mu, "verify_product_theorem_slice");
    require_slice(g, spec.mu, "verify_product_theorem_slice");

    const TransformSpec inv_spec = spec.with_matrices(spec.A1.inverse(), spec.A2.inverse());
    const Field2D conv =
        spatial_convolve(qlct_forward_fast(f, spec), qlct_forward_fast(g, spec), inv_spec);

    // Both stated identities are evaluated through the inverse transform (the
    // corollary proof's own form); the pointwise spectral comparison would
    // carry window-truncation error instead of testing the algebra.
    const Field2D route1 = qlct_inverse_direct(conv, spec, f.spec);
    const Deviation d1 = measure(route1, chirped_product(f, g, spec, +1.0));

    const TransformSpec breve_spec = spec.with_matrices(spec.A1.breve(), spec.A2.breve());
    const Field2D route2 = qlct_inverse_direct(conv, breve_spec, f.spec);
    const Deviation d2 = measure(route2, pointwise_mul(f, g));
    return make_report("product-slice", {d1, d2}, tol);
}

TheoremReport verify_product_theorem_full(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                          double tol) {
    require_parallel(spec, "verify_product_theorem_full");
    const Frame fr = detail::frame_for(spec.mu, spec.mu);
    const auto [fa, fb] = components(f, fr);
    const auto [ga, gb] = components(g, fr);
    const TransformSpec mn = spec.with_nu_negated();
    const TransformSpec inv_spec = spec.with_matrices(spec.A1.inverse(), spec.A2.inverse());

    const Field2D r1 = spatial_convolve(qlct_forward_fast(fa, spec), qlct_forward_fast(ga, spec), inv_spec);
    const Field2D r2 =
        spatial_convolve(qlct_forward_fast(fb, spec), qlct_forward_fast(conj_field(gb), spec), inv_spec);
    // The cross terms between L^{mu,-mu} factors take the conjugated right weight.
    const Field2D r3 =
        spatial_convolve_conj_w2(qlct_forward_fast(fb, mn), qlct_forward_fast(conj_field(ga), mn), inv_spec);
    const Field2D r4 = spatial_convolve_conj_w2(qlct_forward_fast(fa, mn), qlct_forward_fast(gb, mn), inv_spec);

    const Field2D rhs = (r1 - r2) + right_mul(r3 + r4, fr.nu.q());

    const Field2D route1 = qlct_inverse_direct(rhs, spec, f.spec);
    const Deviation d1 = measure(route1, chirped_product(f, g, spec, +1.0));

    const TransformSpec breve_spec = spec.with_matrices(spec.A1.breve(), spec.A2.breve());
    const Field2D route2 = qlct_inverse_direct(rhs, breve_spec, f.spec);
    const Deviation d2 = measure(route2, pointwise_mul(f, g));
    return make_report("product-full", {d1, d2}, tol);
}

TheoremReport verify_correlation_slice(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol) {
    require_parallel(spec, "verify_correlation_slice");
    require_slice(f, spec.mu, "verify_correlation_slice");
    require_slice(g, spec.mu, "verify_correlation_slice");

    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);
    const Field2D lhs = qlct_forward_direct(correlate_spatial(f, g, spec), spec, freq);

    const Field2D rhs1 = pointwise_mul(phase_field(freq, spec, -1.0, -1.0),
                                       pointwise_mul(direct_at_negated(conj_field(f), spec, freq),
                                                     qlct_forward_fast(g, spec)));
    const TransformSpec tsp = spec.with_matrices(spec.A1.tilde(), spec.A2.tilde());
    const Field2D rhs2 =
        pointwise_mul(direct_at_negated(conj_field(f), tsp, freq), qlct_forward_fast(g, tsp));
    return make_report("correlation-slice", {measure(lhs, rhs1), measure(lhs, rhs2)}, tol);
}

TheoremReport verify_correlation_full(const Field2D& f, const Field2D& g, const TransformSpec& spec, double tol) {
    require_parallel(spec, "verify_correlation_full");
    const Frame fr = detail::frame_for(spec.mu, spec.mu);
    const auto [fa, fb] = components(f, fr);
    const auto [ga, gb] = components(g, fr);
    const TransformSpec mn = spec.with_nu_negated();
    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);

    const Field2D lhs = qlct_forward_direct(correlate_spatial(f, g, spec), spec, freq);

    const Field2D head =
        pointwise_mul(direct_at_negated(conj_field(fa), spec, freq), qlct_forward_fast(ga, spec)) +
        pointwise_mul(direct_at_negated(fb, spec, freq), qlct_forward_fast(conj_field(gb), spec));
    const Field2D tail =
        pointwise_mul(direct_at_negated(fb, mn, freq), qlct_forward_fast(conj_field(ga), mn)) -
        pointwise_mul(direct_at_negated(conj_field(fa), mn, freq), qlct_forward_fast(gb, mn));
    const Field2D rhs = pointwise_mul(phase_field(freq, spec, -1.0, -1.0), head) -
                        pointwise_mul(phase_field(freq, spec, -1.0, +1.0), right_mul(tail, fr.nu.q()));
    return make_report("correlation-full", {measure(lhs, rhs)}, tol);
}

TheoremReport verify_spectral_conv_theorem(const Field2D& f, const Field2D& g, const TransformSpec& spec,
                                           double tol) {
    require_parallel(spec, "verify_spectral_conv_theorem");
    const Field2D F = qlct_forward_fast(f, spec);
    const Field2D G = qlct_forward_fast(g, spec);

    const Field2D lhs1 = qlct_forward_fast(spectral_convolve(f, g, spec), spec);
    const Deviation d1 = measure(lhs1, pointwise_mul(F, G));

    const GridSpec2D freq = conjugate_grid(f.spec, spec.A1, spec.A2);
    const Field2D lhs2 = qlct_forward_fast(correlate_spectral(f, g, spec), spec);
    const Deviation d2 = measure(lhs2, pointwise_mul(F, direct_at_negated(conj_field(g), spec, freq)));
    return make_report("spectral-conv", {d1, d2}, tol);
}

std::vector<TheoremReport> run_theorem_suite(int size, std::uint64_t seed, double tol_scale, bool include_general) {
    const GridSpec2D grid(size, size, 0.5, 0.5, true);
    const TransformSpec spec = parse_transform_spec("1 2 1 3 / 0.5 1 -1 0");
    auto slice = [&](std::uint64_t s) { return random_field(grid, s, FieldKind::SmoothSlice); };
    auto full = [&](std::uint64_t s) { return random_field(grid, s, FieldKind::Smooth); };

    std::vector<TheoremReport> reports;
    reports.push_back(verify_conv_theorem_slice(slice(seed + 1), slice(seed + 2), spec, 1e-6 * tol_scale));
    reports.push_back(verify_conv_theorem_full(full(seed + 3), full(seed + 4), spec, 1e-6 * tol_scale));
    reports.push_back(verify_parseval(slice(seed + 5), slice(seed + 6), spec, 1e-5 * tol_scale));
    reports.push_back(verify_product_theorem_slice(slice(seed + 7), slice(seed + 8), spec, 1e-5 * tol_scale));
    reports.push_back(verify_product_theorem_full(full(seed + 9), full(seed + 10), spec, 1e-5 * tol_scale));
    reports.push_back(verify_correlation_slice(slice(seed + 11), slice(seed + 12), spec, 1e-5 * tol_scale));
    reports.push_back(verify_correlation_full(full(seed + 13), full(seed + 14), spec, 1e-5 * tol_scale));
    reports.push_back(verify_spectral_conv_theorem(full(seed + 15), full(seed + 16), spec, 1e-6 * tol_scale));
    if (include_general) {
        const int n = std::min(size, 8);
        const GridSpec2D small(n, n, 0.5, 0.5, true);
        const TransformSpec two_axis = TransformSpec::canonical_two_axis(spec.A1, spec.A2);
        reports.push_back(verify_general_conv_theorem(random_field(small, seed + 17, FieldKind::Smooth),
                                                      random_field(small, seed + 18, FieldKind::Smooth), two_axis,
                                                      1e-5 * tol_scale));
    }
    return reports;
}

}  // namespace qlct
