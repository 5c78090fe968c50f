#pragma once

#include "skytour/coverage.hpp"
#include "skytour/geometry.hpp"
#include "skytour/planner.hpp"

#include <cstdint>
#include <set>
#include <string>

namespace skytour {

/// Full pipeline configuration. Keys carry explicit units (h_u_m, v_kmh, ...)
/// to keep the mixed m/km/min inputs honest.
struct PlanConfig {
    LosParams los;
    double default_h_max_m = 10.0;
    int rho = 5;
    double poi_spacing_m = 50.0;
    FleetParams fleet;
    std::uint64_t seed = 1;
    std::set<RoadClass> road_classes = {RoadClass::primary, RoadClass::secondary,
                                        RoadClass::residential};
    CoverMethod solver = CoverMethod::greedy;

    void validate() const;
};

/// Parses the TOML subset used by config files: [section] headers, key = value
/// lines with string, number, boolean, and flat array values, and # comments.
PlanConfig load_config(const std::string& path);
PlanConfig parse_config(const std::string& text);

}  // namespace skytour
