#pragma once

#include "skytour/geometry.hpp"

#include <string>
#include <vector>

namespace skytour {

struct GeoSubarea {
    std::string id;
    double h_max_m = 0.0;
    std::vector<GeoPoint> ring;  // exterior ring, closing point optional
};

struct GeoSegment {
    RoadClass cls = RoadClass::residential;
    std::vector<GeoPoint> points;
};

/// FeatureCollection of Polygons with numeric property "h_max_m".
std::vector<GeoSubarea> load_subareas_geojson(const std::string& path);

/// FeatureCollection of LineStrings with string property "class".
std::vector<GeoSegment> load_roads_geojson(const std::string& path);

/// Center of the joint bounding box; used as the projection origin.
GeoPoint dataset_origin(const std::vector<GeoSubarea>& subareas,
                        const std::vector<GeoSegment>& segments);

Subarea to_planar(const GeoSubarea& s, const GeoPoint& origin);
RoadSegment to_planar(const GeoSegment& s, const GeoPoint& origin);

std::string subareas_to_geojson(const std::vector<GeoSubarea>& subareas);
std::string roads_to_geojson(const std::vector<GeoSegment>& segments);

}  // namespace skytour
