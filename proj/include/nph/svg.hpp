#pragma once

#include <string>

#include "nph/index.hpp"

namespace nph {

// Static picture of a surface: faces, one short arrow per field value, and
// vertices coloured by index (report rows with index != 0 are enlarged).
// Throws MissingCoordinates.
std::string emit_svg(const SurfaceComplex& c, const NField* field, const VerificationVerdict* report);

}  // namespace nph
