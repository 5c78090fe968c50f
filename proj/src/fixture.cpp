#include "skytour/fixture.hpp"

#include "skytour/errors.hpp"

#include <string>

namespace skytour {

namespace {

std::vector<GeoPoint> to_geo(const std::vector<PlanarPoint>& pts, const GeoPoint& origin) {
    std::vector<GeoPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(unproject_one(p, origin));
    return out;
}

RoadClass class_for(int index) {
    switch (index % 3) {
        case 0: return RoadClass::primary;
        case 1: return RoadClass::secondary;
        default: return RoadClass::residential;
    }
}

}  // namespace

Fixture make_fixture(const FixtureSpec& spec) {
    if (spec.zone_heights_m.empty()) throw InputError("fixture needs at least one height zone");
    Fixture fx;

    const double zone_w = spec.width_m / static_cast<double>(spec.zone_heights_m.size());
    for (std::size_t z = 0; z < spec.zone_heights_m.size(); ++z) {
        const double x0 = zone_w * static_cast<double>(z);
        const double x1 = x0 + zone_w;
        GeoSubarea sub;
        sub.id = "zone-" + std::to_string(z);
        sub.h_max_m = spec.zone_heights_m[z];
        sub.ring = to_geo({{x0, 0.0}, {x1, 0.0}, {x1, spec.height_m}, {x0, spec.height_m}},
                          spec.origin);
        fx.subareas.push_back(std::move(sub));
    }

    int index = 0;
    for (double y = 0.0; y <= spec.height_m + 1e-9; y += spec.road_spacing_m) {
        GeoSegment seg;
        seg.cls = class_for(index++);
        seg.points = to_geo({{0.0, y}, {spec.width_m, y}}, spec.origin);
        fx.roads.push_back(std::move(seg));
    }
    for (double x = 0.0; x <= spec.width_m + 1e-9; x += spec.road_spacing_m) {
        GeoSegment seg;
        seg.cls = class_for(index++);
        seg.points = to_geo({{x, 0.0}, {x, spec.height_m}}, spec.origin);
        fx.roads.push_back(std::move(seg));
    }
    return fx;
}

std::string fixture_config_toml() {
    return R"([los]
h_v_m = 2.0
h_u_m = 500.0
w_bv_m = 4.0
r_max_m = 1000.0
default_h_max_m = 10.0

[grid]
rho = 5
poi_spacing_m = 50.0

[fleet]
v_kmh = 40.0
t_min = 30.0

[run]
seed = 1
solver = "greedy"
road_classes = ["primary", "secondary", "residential"]
)";
}

}  // namespace skytour
