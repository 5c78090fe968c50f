#pragma once

#include "skytour/geojson.hpp"

#include <string>
#include <vector>

namespace skytour {

/// Synthetic grid-city generator used for tests and demos: a rectangular area
/// split into vertical height zones, with a regular road grid of mixed classes.
struct FixtureSpec {
    double width_m = 4000.0;
    double height_m = 4000.0;
    double road_spacing_m = 400.0;
    GeoPoint origin{35.17, 33.36};
    std::vector<double> zone_heights_m = {24.0, 38.0, 52.0};
};

struct Fixture {
    std::vector<GeoSubarea> subareas;
    std::vector<GeoSegment> roads;
};

Fixture make_fixture(const FixtureSpec& spec = {});

/// Matching config.toml text (paper-style LOS parameters, 40 km/h, 30 min).
std::string fixture_config_toml();

}  // namespace skytour
