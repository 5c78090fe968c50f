#pragma once

#include "skytour/config.hpp"
#include "skytour/geojson.hpp"
#include "skytour/serialize.hpp"

#include <string>
#include <vector>

namespace skytour {

struct RunReport {
    int n_candidate_sites = 0;
    int n_pois = 0;
    int n_selected_sites = 0;
    CoverSolution cover;
    PlanDocument plan_doc;
    PlanStats stats;
    std::vector<PoI> pois;  // kept for plotting
    double elapsed_s = 0.0;
};

/// Full pipeline: project -> lattice -> PoI sampling -> coverage -> set cover
/// -> MTA over the selected sites.
RunReport run_pipeline(const std::vector<GeoSubarea>& subareas,
                       const std::vector<GeoSegment>& roads, const PlanConfig& config);

}  // namespace skytour
