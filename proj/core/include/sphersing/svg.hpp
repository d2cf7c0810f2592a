#pragma once

#include "sphersing/colored_fan.hpp"

#include <string>

namespace sphersing {

/// Deterministic SVG picture of a rank-2 colored fan: axes, one arrow per
/// fan ray, filled dots on colorless rays, ring-bordered dots at the color
/// images of F_X.  Throws "RenderRankUnsupported" when the rank is not 2.
std::string render_fan_svg(const ColoredFan& fan);

}  // namespace sphersing
