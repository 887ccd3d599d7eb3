#pragma once

#include <string>

#include "cylindric/paths.hpp"

namespace cylindric {

// Static SVG of the lattice paths on the unrolled cylinder (columns 0..T,
// column T identified with column 0). Up steps carry class "up" (red), down
// steps "down" (blue), and unoccupied vertices inside the family a yellow
// "surface" tile.
std::string render_svg(const PathFamily& f);

}  // namespace cylindric
