#pragma once

#include <stdexcept>
#include <string>

namespace qlct {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonOrthogonalAxes : Error {
    using Error::Error;
};

struct DivisionByZeroQuaternion : Error {
    using Error::Error;
};

struct InvalidExponent : Error {
    using Error::Error;
};

struct OriginNotOnGrid : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

/// b = 0 on some axis: the oscillatory kernel degenerates; callers must route
/// to the chirp-and-scale branch instead.
struct DegenerateB : Error {
    using Error::Error;
};

struct InvalidDegenerate : Error {
    using Error::Error;
};

struct NotSliceValued : Error {
    using Error::Error;
};

/// Spectral division hit a value below the configured floor. Carries the
/// offending frequency sample.
struct SingularSymbol : Error {
    SingularSymbol(const std::string& msg, double u_, double v_, int i_, int j_)
        : Error(msg), u(u_), v(v_), i(i_), j(j_) {}
    double u = 0.0, v = 0.0;
    int i = 0, j = 0;
};

struct SymbolZeroOnAxis : Error {
    using Error::Error;
};

struct InvalidBand : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qlct
