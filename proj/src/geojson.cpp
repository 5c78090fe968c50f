#include "skytour/geojson.hpp"

#include "skytour/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>

namespace skytour {

using nlohmann::json;

namespace {

json load_feature_collection(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open GeoJSON file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    if (doc.value("type", "") != "FeatureCollection")
        throw InputError(path + ": expected a FeatureCollection");
    if (!doc.contains("features") || !doc["features"].is_array())
        throw InputError(path + ": missing \"features\" array");
    return doc;
}

GeoPoint parse_position(const json& coord, const std::string& where) {
    if (!coord.is_array() || coord.size() < 2 || !coord[0].is_number() || !coord[1].is_number())
        throw InputError(where + ": positions must be [lon, lat] number pairs");
    GeoPoint p{coord[1].get<double>(), coord[0].get<double>()};
    if (p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0)
        throw InputError(where + ": coordinate out of WGS84 range");
    return p;
}

}  // namespace

std::vector<GeoSubarea> load_subareas_geojson(const std::string& path) {
    const json doc = load_feature_collection(path);
    std::vector<GeoSubarea> subareas;
    int idx = 0;
    for (const auto& feature : doc["features"]) {
        const std::string where = path + " feature " + std::to_string(idx);
        const auto& geom = feature.value("geometry", json::object());
        if (geom.value("type", "") != "Polygon")
            throw InputError(where + ": expected Polygon geometry");
        const auto& props = feature.value("properties", json::object());
        if (!props.contains("h_max_m") || !props["h_max_m"].is_number())
            throw InputError(where + ": missing numeric property \"h_max_m\"");
        GeoSubarea sub;
        sub.h_max_m = props["h_max_m"].get<double>();
        if (sub.h_max_m <= 0.0) throw InputError(where + ": h_max_m must be positive");
        sub.id = props.value("id", "subarea-" + std::to_string(idx));
        const auto& rings = geom["coordinates"];
        if (!rings.is_array() || rings.empty())
            throw InputError(where + ": polygon has no rings");
        for (const auto& coord : rings[0]) sub.ring.push_back(parse_position(coord, where));
        // Drop an explicit closing point.
        if (sub.ring.size() > 3 && sub.ring.front().lat == sub.ring.back().lat &&
            sub.ring.front().lon == sub.ring.back().lon)
            sub.ring.pop_back();
        if (sub.ring.size() < 3) throw InputError(where + ": polygon needs >= 3 vertices");
        subareas.push_back(std::move(sub));
        ++idx;
    }
    return subareas;
}

std::vector<GeoSegment> load_roads_geojson(const std::string& path) {
    const json doc = load_feature_collection(path);
    std::vector<GeoSegment> segments;
    int idx = 0;
    for (const auto& feature : doc["features"]) {
        const std::string where = path + " feature " + std::to_string(idx);
        const auto& geom = feature.value("geometry", json::object());
        if (geom.value("type", "") != "LineString")
            throw InputError(where + ": expected LineString geometry");
        const auto& props = feature.value("properties", json::object());
        if (!props.contains("class") || !props["class"].is_string())
            throw InputError(where + ": missing string property \"class\"");
        GeoSegment seg;
        try {
            seg.cls = road_class_from_string(props["class"].get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
        for (const auto& coord : geom["coordinates"]) seg.points.push_back(parse_position(coord, where));
        if (seg.points.size() < 2) throw InputError(where + ": LineString needs >= 2 points");
        segments.push_back(std::move(seg));
        ++idx;
    }
    return segments;
}

GeoPoint dataset_origin(const std::vector<GeoSubarea>& subareas,
                        const std::vector<GeoSegment>& segments) {
    double min_lat = std::numeric_limits<double>::max(), max_lat = std::numeric_limits<double>::lowest();
    double min_lon = min_lat, max_lon = max_lat;
    auto take = [&](const GeoPoint& p) {
        min_lat = std::min(min_lat, p.lat);
        max_lat = std::max(max_lat, p.lat);
        min_lon = std::min(min_lon, p.lon);
        max_lon = std::max(max_lon, p.lon);
    };
    for (const auto& s : subareas)
        for (const auto& p : s.ring) take(p);
    for (const auto& s : segments)
        for (const auto& p : s.points) take(p);
    if (min_lat > max_lat) throw InputError("dataset is empty, cannot choose a projection origin");
    return {(min_lat + max_lat) / 2.0, (min_lon + max_lon) / 2.0};
}

Subarea to_planar(const GeoSubarea& s, const GeoPoint& origin) {
    Subarea out;
    out.id = s.id;
    out.h_max_m = s.h_max_m;
    for (const auto& p : s.ring) out.boundary.push_back(project_one(p, origin));
    return out;
}

RoadSegment to_planar(const GeoSegment& s, const GeoPoint& origin) {
    RoadSegment out;
    out.cls = s.cls;
    for (const auto& p : s.points) out.polyline.push_back(project_one(p, origin));
    return out;
}

std::string subareas_to_geojson(const std::vector<GeoSubarea>& subareas) {
    json features = json::array();
    for (const auto& s : subareas) {
        json ring = json::array();
        for (const auto& p : s.ring) ring.push_back({p.lon, p.lat});
        ring.push_back({s.ring.front().lon, s.ring.front().lat});
        features.push_back({{"type", "Feature"},
                            {"properties", {{"id", s.id}, {"h_max_m", s.h_max_m}}},
                            {"geometry", {{"type", "Polygon"}, {"coordinates", json::array({ring})}}}});
    }
    return json{{"type", "FeatureCollection"}, {"features", features}}.dump(2);
}

std::string roads_to_geojson(const std::vector<GeoSegment>& segments) {
    json features = json::array();
    for (const auto& s : segments) {
        json coords = json::array();
        for (const auto& p : s.points) coords.push_back({p.lon, p.lat});
        features.push_back({{"type", "Feature"},
                            {"properties", {{"class", to_string(s.cls)}}},
                            {"geometry", {{"type", "LineString"}, {"coordinates", coords}}}});
    }
    return json{{"type", "FeatureCollection"}, {"features", features}}.dump(2);
}

}  // namespace skytour
