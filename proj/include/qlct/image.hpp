#pragma once

#include <string>

#include "qlct/grid.hpp"

namespace qlct {

/// Loads an 8-bit RGB image (PNG or binary PPM, by extension) as a pure
/// quaternion field: f = (R*mu + G*nu + B*eta)/255 on a centered unit-spacing
/// grid, zero real part. Grayscale and palette PNGs are expanded to RGB.
Field2D image_to_field(const std::string& path);

/// Writes the imaginary channels of f as an 8-bit RGB image. Channels are
/// clamped to [0,1] and rounded on export only.
void field_to_image(const Field2D& f, const std::string& path);

}  // namespace qlct
