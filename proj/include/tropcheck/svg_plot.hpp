#pragma once

#include "tropcheck/pieces.hpp"

#include <string>
#include <vector>

namespace tropcheck {

struct Viewport {
  Rational xmin = -5, xmax = 5, ymin = -5, ymax = 5;
};

Viewport parse_viewport(std::string_view text);

/// Cell polygon clipped to the viewport, counter-clockwise; empty when the
/// cell misses the viewport.
std::vector<Vector> clip_cell(const Polyhedron& cell, const Viewport& view);

/// SVG drawing of a planar decomposition, cells coloured by Jacobian sign.
std::string plot_svg(const Decomposition& d, const Viewport& view);

}  // namespace tropcheck
