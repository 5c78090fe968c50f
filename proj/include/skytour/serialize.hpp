#pragma once

#include "skytour/coverage.hpp"
#include "skytour/geometry.hpp"
#include "skytour/planner.hpp"

#include <string>
#include <vector>

namespace skytour {

/// Everything needed to reload and re-evaluate a plan: the tour node indices
/// refer to `points` (the selected monitoring sites, in planar meters).
struct PlanDocument {
    Plan plan;
    std::vector<PlanarPoint> points;
    FleetParams fleet;
    GeoPoint origin;  // projection origin for WGS84 output
};

std::string cover_solution_to_json(const CoverSolution& sol);

std::string plan_to_json(const PlanDocument& doc);
PlanDocument plan_from_json_file(const std::string& path);

std::string stats_to_json(const PlanStats& stats);

/// Closed LineString ring per tour, WGS84 coordinates with planar copies and
/// the tour cost under "properties".
std::string tours_to_geojson(const PlanDocument& doc);

std::string comparison_to_json(const PlanStats& mta_stats, const MonteCarloReport& report);
std::string comparison_to_text(const PlanStats& mta_stats, const MonteCarloReport& report);

std::string sweep_to_csv(const std::vector<std::pair<double, int>>& sweep);

}  // namespace skytour
