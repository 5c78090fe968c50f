#include "skytour/geometry.hpp"

#include "skytour/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skytour {

RoadClass road_class_from_string(const std::string& s) {
    if (s == "primary") return RoadClass::primary;
    if (s == "secondary") return RoadClass::secondary;
    if (s == "residential") return RoadClass::residential;
    throw InputError("unknown road class: \"" + s + "\"");
}

const char* to_string(RoadClass c) {
    switch (c) {
        case RoadClass::primary: return "primary";
        case RoadClass::secondary: return "secondary";
        default: return "residential";
    }
}

PlanarPoint project_one(const GeoPoint& p, const GeoPoint& origin) {
    if (!std::isfinite(p.lat) || !std::isfinite(p.lon))
        throw InputError("non-finite geographic coordinate");
    const double cos_lat0 = std::cos(origin.lat * M_PI / 180.0);
    return {(p.lon - origin.lon) * cos_lat0 * kMetersPerDegree,
            (p.lat - origin.lat) * kMetersPerDegree};
}

GeoPoint unproject_one(const PlanarPoint& p, const GeoPoint& origin) {
    const double cos_lat0 = std::cos(origin.lat * M_PI / 180.0);
    return {origin.lat + p.y() / kMetersPerDegree,
            origin.lon + p.x() / (cos_lat0 * kMetersPerDegree)};
}

std::vector<PlanarPoint> project(const std::vector<GeoPoint>& points, const GeoPoint& origin) {
    std::vector<PlanarPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(project_one(p, origin));
    return out;
}

LosAngles los_angles(double w_ub_m, double w_bv_m, double h_u_m, double h_b_m, double h_v_m) {
    if (h_u_m == h_v_m) throw DegenerateInput("drone altitude equals vehicle height");
    if (h_b_m == h_v_m) throw DegenerateInput("building height equals vehicle height");
    return {(w_ub_m + w_bv_m) / (h_u_m - h_v_m), w_bv_m / (h_b_m - h_v_m)};
}

double los_radius(double h_max_m, const LosParams& params) {
    if (h_max_m <= params.h_v_m) return params.r_max_m;  // no obstruction taller than vehicles
    const double r = (params.h_u_m - params.h_v_m) / (h_max_m - params.h_v_m) * params.w_bv_m;
    return std::min(params.r_max_m, r);
}

bool point_in_polygon(const PlanarPoint& p, const std::vector<PlanarPoint>& polygon) {
    // Ray casting; points on an edge are treated as outside via the epsilon
    // below (grid points are required to be strictly interior).
    const std::size_t n = polygon.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const PlanarPoint& a = polygon[i];
        const PlanarPoint& b = polygon[j];
        // On-edge check
        const Eigen::Vector2d ab = b - a;
        const Eigen::Vector2d ap = p - a;
        const double cross = ab.x() * ap.y() - ab.y() * ap.x();
        const double dot = ap.dot(ab);
        if (std::abs(cross) < 1e-9 * (1.0 + ab.norm()) && dot >= -1e-9 && dot <= ab.squaredNorm() + 1e-9)
            return false;
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double x_int = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < x_int) inside = !inside;
        }
    }
    return inside;
}

namespace {

struct BBox {
    double min_x, min_y, max_x, max_y;
};

BBox bbox_of(const std::vector<PlanarPoint>& poly) {
    BBox b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const auto& p : poly) {
        b.min_x = std::min(b.min_x, p.x());
        b.min_y = std::min(b.min_y, p.y());
        b.max_x = std::max(b.max_x, p.x());
        b.max_y = std::max(b.max_y, p.y());
    }
    return b;
}

}  // namespace

std::vector<CandidateSite> build_grid(const std::vector<Subarea>& subareas, int rho,
                                      const LosParams& params) {
    if (rho < 1) throw InputError("rho must be >= 1");
    std::vector<CandidateSite> sites;
    for (std::size_t l = 0; l < subareas.size(); ++l) {
        const Subarea& sub = subareas[l];
        if (sub.boundary.size() < 3) throw InputError("subarea \"" + sub.id + "\" has fewer than 3 vertices");
        const double spacing = los_radius(sub.h_max_m, params) / rho;
        const BBox bb = bbox_of(sub.boundary);
        std::vector<CandidateSite> local;
        for (long iy = 0; bb.min_y + static_cast<double>(iy) * spacing <= bb.max_y; ++iy) {
            const double y = bb.min_y + static_cast<double>(iy) * spacing;
            for (long ix = 0; bb.min_x + static_cast<double>(ix) * spacing <= bb.max_x; ++ix) {
                const double x = bb.min_x + static_cast<double>(ix) * spacing;
                const PlanarPoint p{x, y};
                if (!point_in_polygon(p, sub.boundary)) continue;
                bool claimed = false;  // first-listed subarea wins on overlap
                for (std::size_t m = 0; m < l && !claimed; ++m)
                    claimed = point_in_polygon(p, subareas[m].boundary);
                if (!claimed) local.push_back({p, sub.id});
            }
        }
        // Row-major generation already yields (y, x) order within the subarea.
        sites.insert(sites.end(), local.begin(), local.end());
    }
    return sites;
}

std::vector<PoI> sample_pois(const RoadNetwork& network, double spacing_m,
                             const std::vector<Subarea>& subareas, const LosParams& params,
                             double default_h_max_m) {
    if (spacing_m <= 0.0) throw InputError("PoI spacing must be positive");
    const double default_radius = los_radius(default_h_max_m, params);
    auto radius_at = [&](const PlanarPoint& p) {
        for (const auto& sub : subareas)
            if (point_in_polygon(p, sub.boundary)) return los_radius(sub.h_max_m, params);
        return default_radius;
    };

    std::vector<PoI> pois;
    for (std::size_t s = 0; s < network.segments.size(); ++s) {
        const auto& line = network.segments[s].polyline;
        if (line.size() < 2) throw InputError("road segment with fewer than 2 points");
        auto emit = [&](const PlanarPoint& p) {
            pois.push_back({p, radius_at(p), static_cast<int>(s)});
        };
        emit(line.front());
        double next_mark = spacing_m;
        double walked = 0.0;
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            const PlanarPoint a = line[i];
            const PlanarPoint b = line[i + 1];
            const double len = (b - a).norm();
            while (next_mark <= walked + len + 1e-9) {
                const double t = (next_mark - walked) / len;
                if (t > 1.0 - 1e-12 && i + 2 == line.size()) break;  // coincides with final endpoint
                emit(a + t * (b - a));
                next_mark += spacing_m;
            }
            walked += len;
        }
        emit(line.back());
    }
    return pois;
}

}  // namespace skytour
