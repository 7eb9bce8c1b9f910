#pragma once

#include <optional>
#include <string>

#include "ids/classify.hpp"
#include "ids/geom.hpp"

namespace ids {

// SVG 1.1 drawing of the set with an optional line or circle witness.
// Display coordinates are rounded to six decimals; element order follows
// point order, so the output is byte-stable.
std::string plot_svg(const PointSet& s, const std::optional<StructureWitness>& witness);

}  // namespace ids
