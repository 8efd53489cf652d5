#pragma once

#include "ect/transforms.hpp"

#include <string>

namespace ect {

// Static SVG plot of a single curve. Step curves are drawn as staircases
// with a filled dot at each breakpoint's (right) value and an open dot at
// the left limit; piecewise-linear curves as a polyline through the knots.
std::string render_svg(const AnyCurve& curve);

}  // namespace ect
