#include "skytour/pipeline.hpp"

#include "skytour/clustering.hpp"
#include "skytour/errors.hpp"

#include <chrono>

namespace skytour {

RunReport run_pipeline(const std::vector<GeoSubarea>& subareas,
                       const std::vector<GeoSegment>& roads, const PlanConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    config.validate();

    std::vector<GeoSegment> kept_roads;
    for (const auto& seg : roads)
        if (config.road_classes.count(seg.cls)) kept_roads.push_back(seg);
    if (kept_roads.empty())
        throw InputError("no road segments match the configured road classes");

    const GeoPoint origin = dataset_origin(subareas, kept_roads);
    std::vector<Subarea> planar_subareas;
    for (const auto& s : subareas) planar_subareas.push_back(to_planar(s, origin));
    RoadNetwork network;
    for (const auto& s : kept_roads) network.segments.push_back(to_planar(s, origin));

    RunReport report;
    const std::vector<CandidateSite> sites = build_grid(planar_subareas, config.rho, config.los);
    report.pois = sample_pois(network, config.poi_spacing_m, planar_subareas, config.los,
                              config.default_h_max_m);
    report.n_candidate_sites = static_cast<int>(sites.size());
    report.n_pois = static_cast<int>(report.pois.size());

    const CoverageMatrix C = build_coverage(sites, report.pois);
    report.cover = config.solver == CoverMethod::greedy ? greedy_cover(C) : exact_cover(C);
    report.n_selected_sites = report.cover.objective;

    std::vector<PlanarPoint> selected;
    for (int i : report.cover.selected)
        selected.push_back(sites[static_cast<std::size_t>(i)].position);

    report.plan_doc.plan = mta(selected, config.fleet, config.seed);
    report.plan_doc.points = std::move(selected);
    report.plan_doc.fleet = config.fleet;
    report.plan_doc.origin = origin;
    report.stats = plan_stats(report.plan_doc.plan);

    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace skytour
