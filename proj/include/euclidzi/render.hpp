#pragma once

#include <optional>
#include <string>

#include "euclidzi/regions.hpp"

namespace euclidzi {

// Fixed-style SVG of a region: one 16px cell per lattice point, grayscale
// fill by decomposition layer (layer 0 lightest; single mid-gray when no
// scheme applies), thin unlabeled axes, a ring marking the origin. Styling
// constants never change, so outputs are diffable.
std::string render_region_svg(RegionSpec spec, std::optional<DecompScheme> scheme);

}  // namespace euclidzi
