#pragma once

#include "skytour/planner.hpp"

#include <string>
#include <vector>

namespace skytour {

/// Deterministic SVG map of a plan: one color per tour (by tour index), closed
/// tour polylines, PoIs as dots, legend with per-tour costs.
std::string emit_svg(const Plan& plan, const std::vector<PlanarPoint>& sites,
                     const std::vector<PoI>& pois);

/// Line chart of tour count against the distance budget.
std::string sweep_svg(const std::vector<std::pair<double, int>>& sweep);

}  // namespace skytour
