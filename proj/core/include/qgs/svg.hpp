#pragma once

#include <string>

#include "qgs/packing.hpp"

namespace qgs {

// Plane tangency diagram when the packing still carries its layout, otherwise
// an orthographic view of the sphere from +z (hidden hemisphere dimmed).
std::string packing_to_svg(const CirclePacking& packing);

}  // namespace qgs
