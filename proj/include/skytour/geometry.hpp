#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace skytour {

/// Planar coordinates in meters relative to the projection origin.
using PlanarPoint = Eigen::Vector2d;

struct GeoPoint {
    double lat = 0.0;  // degrees WGS84, [-90, 90]
    double lon = 0.0;  // degrees WGS84, [-180, 180]
};

/// Line-of-sight model parameters shared by all subareas.
struct LosParams {
    double h_v_m = 2.0;        // vehicle height
    double h_u_m = 500.0;      // drone altitude
    double w_bv_m = 4.0;       // building-to-vehicle horizontal distance
    double r_max_m = 1000.0;   // cap on the detection radius
};

/// A region with a common maximum building height.
struct Subarea {
    std::string id;
    std::vector<PlanarPoint> boundary;  // simple polygon, >= 3 vertices
    double h_max_m = 0.0;
};

enum class RoadClass { primary, secondary, residential };

RoadClass road_class_from_string(const std::string& s);
const char* to_string(RoadClass c);

struct RoadSegment {
    std::vector<PlanarPoint> polyline;  // >= 2 points
    RoadClass cls = RoadClass::residential;
};

struct RoadNetwork {
    std::vector<RoadSegment> segments;
};

/// A road point that must be observable from some selected site.
struct PoI {
    PlanarPoint position;
    double radius_m = 0.0;   // detection radius of the enclosing subarea
    int source_segment = -1;
};

/// A lattice point where a drone may hover.
struct CandidateSite {
    PlanarPoint position;
    std::string subarea_id;
};

inline constexpr double kMetersPerDegree = 111320.0;

/// Equirectangular local projection about `origin`. x is meters east, y meters north.
std::vector<PlanarPoint> project(const std::vector<GeoPoint>& points, const GeoPoint& origin);
PlanarPoint project_one(const GeoPoint& p, const GeoPoint& origin);
GeoPoint unproject_one(const PlanarPoint& p, const GeoPoint& origin);

/// Tangents of the viewing angle and the building-obstruction angle.
/// Line of sight holds when tan_theta >= tan_phi.
struct LosAngles {
    double tan_theta;
    double tan_phi;
    bool visible() const { return tan_theta >= tan_phi; }
};
LosAngles los_angles(double w_ub_m, double w_bv_m, double h_u_m, double h_b_m, double h_v_m);

/// Maximum horizontal drone-to-vehicle distance preserving line of sight for a
/// subarea with maximum building height h_max. Capped at params.r_max_m; when no
/// building exceeds vehicle height the radius is camera-limited, so r_max applies.
double los_radius(double h_max_m, const LosParams& params);

/// Square lattice of candidate sites per subarea, spacing los_radius/rho, anchored
/// at the subarea's bounding-box lower-left corner. Keeps points strictly inside
/// the polygon; on overlap the first-listed subarea wins. Output is sorted by
/// subarea order, then y, then x.
std::vector<CandidateSite> build_grid(const std::vector<Subarea>& subareas, int rho,
                                      const LosParams& params);

/// Walk each road polyline emitting a PoI every `spacing_m` of arc length, both
/// endpoints included. PoIs outside every subarea use `default_h_max_m`.
std::vector<PoI> sample_pois(const RoadNetwork& network, double spacing_m,
                             const std::vector<Subarea>& subareas, const LosParams& params,
                             double default_h_max_m = 10.0);

/// Strict point-in-polygon test (boundary counts as outside).
bool point_in_polygon(const PlanarPoint& p, const std::vector<PlanarPoint>& polygon);

}  // namespace skytour
