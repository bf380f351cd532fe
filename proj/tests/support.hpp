#pragma once

#include <random>

#include "qlct/convolution.hpp"
#include "qlct/grid.hpp"
#include "qlct/params.hpp"

namespace testsupport {

using namespace qlct;

inline Quaternion random_quat(std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    return {nd(rng), nd(rng), nd(rng), nd(rng)};
}

/// Random unit-determinant matrix with |b| in [bmin, bmax]; d solved exactly.
inline ParamMatrix random_param(std::mt19937_64& rng, double bmin = 0.5, double bmax = 4.0) {
    std::uniform_real_distribution<double> ua(0.3, 2.0), ub(bmin, bmax), uc(-2.0, 2.0), sgn(0.0, 1.0);
    const double a = (sgn(rng) < 0.5 ? -1.0 : 1.0) * ua(rng);
    const double b = (sgn(rng) < 0.5 ? -1.0 : 1.0) * ub(rng);
    const double c = uc(rng);
    return {a, b, c, (1.0 + b * c) / a};
}

inline TransformSpec random_spec(std::mt19937_64& rng) {
    return TransformSpec::canonical(random_param(rng), random_param(rng));
}

/// Gaussian e^{-alpha(x^2+y^2)} as the real component.
inline Field2D gaussian_field(const GridSpec2D& spec, double alpha) {
    Field2D f(spec);
    for (int i = 0; i < spec.nx; ++i)
        for (int j = 0; j < spec.ny; ++j)
            f.at(i, j) = Quaternion::real(std::exp(-alpha * (spec.x(i) * spec.x(i) + spec.y(j) * spec.y(j))));
    return f;
}

}  // namespace testsupport
