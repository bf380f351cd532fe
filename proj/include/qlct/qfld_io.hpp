#pragma once

#include <string>

#include "qlct/grid.hpp"

namespace qlct {

/// QFLD binary format: magic "QFLD", u16 version = 1, u32 nx, u32 ny,
/// f64 dx, f64 dy, u8 centered, then nx*ny*4 f64 sample components
/// (r, mu, nu, eta) row-major. All integers and doubles little-endian.
void write_qfld(const std::string& path, const Field2D& f);
Field2D read_qfld(const std::string& path);

}  // namespace qlct
