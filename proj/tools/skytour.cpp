#include "skytour/errors.hpp"
#include "skytour/fixture.hpp"
#include "skytour/pipeline.hpp"
#include "skytour/svg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace skytour;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << content;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

PlanConfig load_config_with_overrides(const std::string& config_path, long long seed_override,
                                      const std::string& solver_override,
                                      const std::string& classes_override) {
    PlanConfig cfg = config_path.empty() ? PlanConfig{} : load_config(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    if (!solver_override.empty()) {
        if (solver_override == "greedy") cfg.solver = CoverMethod::greedy;
        else if (solver_override == "exact") cfg.solver = CoverMethod::exact;
        else throw InputError("--solver must be greedy or exact");
    }
    if (!classes_override.empty()) {
        cfg.road_classes.clear();
        std::stringstream ss(classes_override);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.road_classes.insert(road_class_from_string(item));
    }
    cfg.validate();
    return cfg;
}

int cmd_radius(const std::vector<double>& heights, const PlanConfig& cfg) {
    std::printf("%10s %10s\n", "h_M (m)", "R (m)");
    for (double h : heights) {
        const double r = los_radius(h, cfg.los);
        std::printf("%10.1f %10.1f%s\n", h, r,
                    h <= cfg.los.h_v_m ? "  (no obstruction, clamped to r_max)" : "");
    }
    return kExitOk;
}

int cmd_plan(const std::string& network_path, const std::string& subareas_path,
             const PlanConfig& cfg, const std::string& out_dir) {
    const auto subareas = load_subareas_geojson(subareas_path);
    const auto roads = load_roads_geojson(network_path);
    const RunReport report = run_pipeline(subareas, roads, cfg);

    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    write_file(out / "tours.geojson", tours_to_geojson(report.plan_doc));
    write_file(out / "plan.json", plan_to_json(report.plan_doc));
    write_file(out / "stats.json", stats_to_json(report.stats));
    write_file(out / "cover.json", cover_solution_to_json(report.cover));
    write_file(out / "plot.svg", emit_svg(report.plan_doc.plan, report.plan_doc.points, report.pois));

    std::printf("candidate sites: %d\n", report.n_candidate_sites);
    std::printf("PoIs:            %d\n", report.n_pois);
    std::printf("selected sites:  %d\n", report.n_selected_sites);
    std::printf("m_d:             %.3f km\n", cfg.fleet.max_distance_km());
    std::printf("tours (L):       %d%s\n", report.plan_doc.plan.num_tours,
                report.plan_doc.plan.feasible ? "" : "  (infeasible)");
    std::printf("mean cost:       %.3f km\n", report.stats.mean_cost_km);
    std::printf("CV:              %.3f\n", report.stats.cv);
    std::printf("elapsed:         %.2f s\n", report.elapsed_s);
    return kExitOk;
}

int cmd_compare(const std::string& plan_path, int runs, const std::string& out_dir) {
    const PlanDocument doc = plan_from_json_file(plan_path);
    const PlanStats mta_stats = plan_stats(doc.plan);
    const MonteCarloReport report = monte_carlo_rip(
        doc.points, static_cast<std::size_t>(doc.plan.num_tours), doc.fleet, runs, doc.plan.seed);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "compare.json", comparison_to_json(mta_stats, report));
    const std::string table = comparison_to_text(mta_stats, report);
    write_file(fs::path(out_dir) / "compare.txt", table);
    std::fputs(table.c_str(), stdout);
    return kExitOk;
}

int cmd_sweep(const std::string& network_path, const std::string& subareas_path,
              const PlanConfig& cfg, const std::vector<double>& md_list,
              const std::string& out_dir) {
    for (std::size_t i = 1; i < md_list.size(); ++i)
        if (md_list[i] < md_list[i - 1]) throw InputError("--md list must be ascending");

    const auto subareas = load_subareas_geojson(subareas_path);
    const auto roads = load_roads_geojson(network_path);
    const RunReport report = run_pipeline(subareas, roads, cfg);

    std::vector<FleetParams> variants;
    for (double md : md_list) {
        // Keep the configured flight time; vary speed so that v*t/60 = md.
        FleetParams fleet = cfg.fleet;
        fleet.v_kmh = md * 60.0 / fleet.t_min;
        variants.push_back(fleet);
    }
    const auto sweep = sweep_m_d(report.plan_doc.points, variants, cfg.seed);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", sweep_to_csv(sweep));
    write_file(fs::path(out_dir) / "sweep.svg", sweep_svg(sweep));
    for (const auto& [md, l] : sweep) std::printf("m_d=%.3f km -> L=%d\n", md, l);
    return kExitOk;
}

int cmd_fixture(const std::string& out_dir) {
    const Fixture fx = make_fixture();
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "subareas.geojson", subareas_to_geojson(fx.subareas));
    write_file(fs::path(out_dir) / "roads.geojson", roads_to_geojson(fx.roads));
    write_file(fs::path(out_dir) / "config.toml", fixture_config_toml());
    std::printf("fixture written to %s\n", out_dir.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drone monitoring-site placement and distance-bounded tour planning"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", network_path, subareas_path, plan_path;
    std::string solver_override, classes_override, heights_csv, md_csv;
    long long seed_override = -1;
    int runs = 100;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "config.toml path");
        cmd->add_option("--seed", seed_override, "RNG seed (overrides config)");
        cmd->add_option("--solver", solver_override, "set-cover solver: greedy|exact");
        cmd->add_option("--classes", classes_override, "road classes, comma separated");
    };

    auto* radius = app.add_subcommand("radius", "print detection radii for building heights");
    radius->add_option("--h-max", heights_csv, "building heights in meters, comma separated")
        ->required();
    radius->add_option("--config", config_path, "config.toml path");

    auto* plan = app.add_subcommand("plan", "run the full placement + tour pipeline");
    plan->add_option("--network", network_path, "roads GeoJSON")->required();
    plan->add_option("--subareas", subareas_path, "subareas GeoJSON")->required();
    plan->add_option("--out", out_dir, "output directory");
    add_common(plan);

    auto* compare = app.add_subcommand("compare", "RIP Monte Carlo against a saved MTA plan");
    compare->add_option("--plan", plan_path, "plan.json from a previous run")->required();
    compare->add_option("--runs", runs, "Monte Carlo run count");
    compare->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "tour count for varying max travel distance");
    sweep->add_option("--network", network_path, "roads GeoJSON")->required();
    sweep->add_option("--subareas", subareas_path, "subareas GeoJSON")->required();
    sweep->add_option("--md", md_csv, "ascending m_d list in km, comma separated")->required();
    sweep->add_option("--out", out_dir, "output directory");
    add_common(sweep);

    auto* fixture = app.add_subcommand("fixture", "write the synthetic city fixture");
    fixture->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        const PlanConfig cfg = load_config_with_overrides(config_path, seed_override,
                                                          solver_override, classes_override);
        if (radius->parsed()) return cmd_radius(parse_double_list(heights_csv), cfg);
        if (plan->parsed()) return cmd_plan(network_path, subareas_path, cfg, out_dir);
        if (compare->parsed()) return cmd_compare(plan_path, runs, out_dir);
        if (sweep->parsed())
            return cmd_sweep(network_path, subareas_path, cfg, parse_double_list(md_csv), out_dir);
        if (fixture->parsed()) return cmd_fixture(out_dir);
    } catch (const UncoverablePoIs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
