#include "skytour/serialize.hpp"

#include "skytour/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace skytour {

using nlohmann::json;

std::string cover_solution_to_json(const CoverSolution& sol) {
    return json{{"method", sol.method == CoverMethod::greedy ? "greedy" : "exact"},
                {"objective", sol.objective},
                {"selected_sites", sol.selected}}
        .dump(2);
}

std::string plan_to_json(const PlanDocument& doc) {
    json tours = json::array();
    for (const auto& tour : doc.plan.tours)
        tours.push_back({{"order", tour.order}, {"cost_m", tour.cost_m}});
    json points = json::array();
    for (const auto& p : doc.points) points.push_back({p.x(), p.y()});
    return json{{"method", doc.plan.method == PlanMethod::MTA ? "MTA" : "RIP"},
                {"seed", doc.plan.seed},
                {"num_tours", doc.plan.num_tours},
                {"feasible", doc.plan.feasible},
                {"fleet", {{"v_kmh", doc.fleet.v_kmh}, {"t_min", doc.fleet.t_min},
                           {"m_d_km", doc.fleet.max_distance_km()}}},
                {"origin", {{"lat", doc.origin.lat}, {"lon", doc.origin.lon}}},
                {"points_m", points},
                {"tours", tours}}
        .dump(2);
}

PlanDocument plan_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open plan file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    PlanDocument out;
    try {
        out.plan.method = doc.at("method").get<std::string>() == "RIP" ? PlanMethod::RIP
                                                                       : PlanMethod::MTA;
        out.plan.seed = doc.at("seed").get<std::uint64_t>();
        out.plan.num_tours = doc.at("num_tours").get<int>();
        out.plan.feasible = doc.at("feasible").get<bool>();
        out.fleet.v_kmh = doc.at("fleet").at("v_kmh").get<double>();
        out.fleet.t_min = doc.at("fleet").at("t_min").get<double>();
        out.origin.lat = doc.at("origin").at("lat").get<double>();
        out.origin.lon = doc.at("origin").at("lon").get<double>();
        for (const auto& p : doc.at("points_m"))
            out.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        for (const auto& t : doc.at("tours")) {
            Tour tour;
            tour.order = t.at("order").get<std::vector<int>>();
            tour.cost_m = t.at("cost_m").get<double>();
            out.plan.tours.push_back(std::move(tour));
        }
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return out;
}

std::string stats_to_json(const PlanStats& stats) {
    return json{{"cv", stats.cv},
                {"mean_cost_km", stats.mean_cost_km},
                {"mean_edges", stats.mean_edges},
                {"per_tour_costs_km", stats.per_tour_costs_km}}
        .dump(2);
}

std::string tours_to_geojson(const PlanDocument& doc) {
    json features = json::array();
    for (std::size_t t = 0; t < doc.plan.tours.size(); ++t) {
        const Tour& tour = doc.plan.tours[t];
        json coords = json::array();
        json planar = json::array();
        auto push = [&](int node) {
            const PlanarPoint& p = doc.points[static_cast<std::size_t>(node)];
            const GeoPoint g = unproject_one(p, doc.origin);
            coords.push_back({g.lon, g.lat});
            planar.push_back({p.x(), p.y()});
        };
        for (int node : tour.order) push(node);
        if (tour.order.size() > 1) push(tour.order.front());  // close the ring
        features.push_back({{"type", "Feature"},
                            {"properties",
                             {{"tour", t},
                              {"cost_m", tour.cost_m},
                              {"order", tour.order},
                              {"planar_m", planar}}},
                            {"geometry", {{"type", "LineString"}, {"coordinates", coords}}}});
    }
    return json{{"type", "FeatureCollection"}, {"features", features}}.dump(2);
}

std::string comparison_to_json(const PlanStats& mta_stats, const MonteCarloReport& report) {
    return json{{"runs", report.runs},
                {"mta", {{"mean_edges", mta_stats.mean_edges},
                         {"mean_cost_km", mta_stats.mean_cost_km},
                         {"cv", mta_stats.cv}}},
                {"rip", {{"mean_edges_mu", report.mean_edges_mu},
                         {"mean_edges_var", report.mean_edges_var},
                         {"mean_cost_mu_km", report.mean_cost_mu_km},
                         {"mean_cost_var_km2", report.mean_cost_var_km2},
                         {"run_seeds", report.run_seeds},
                         {"run_mean_edges", report.run_mean_edges},
                         {"run_mean_cost_km", report.run_mean_cost_km}}}}
        .dump(2);
}

std::string comparison_to_text(const PlanStats& mta_stats, const MonteCarloReport& report) {
    char buf[256];
    std::ostringstream out;
    out << "              MTA        RIP mu     RIP var\n";
    std::snprintf(buf, sizeof buf, "|T|      %10.2f %10.2f %10.2f\n", mta_stats.mean_edges,
                  report.mean_edges_mu, report.mean_edges_var);
    out << buf;
    std::snprintf(buf, sizeof buf, "C_L (km) %10.2f %10.2f %10.2f\n", mta_stats.mean_cost_km,
                  report.mean_cost_mu_km, report.mean_cost_var_km2);
    out << buf;
    return out.str();
}

std::string sweep_to_csv(const std::vector<std::pair<double, int>>& sweep) {
    std::ostringstream out;
    out << "m_d_km,num_tours\n";
    for (const auto& [md, tours] : sweep) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g,%d\n", md, tours);
        out << buf;
    }
    return out.str();
}

}  // namespace skytour
