#pragma once

#include "skytour/geometry.hpp"
#include "skytour/routing.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skytour {

/// Shared drone fleet characteristics. The distance budget is v * t / 60.
struct FleetParams {
    double v_kmh = 40.0;
    double t_min = 30.0;
    double max_distance_km() const { return v_kmh * t_min / 60.0; }
    double max_distance_m() const { return max_distance_km() * 1000.0; }
};

enum class PlanMethod { MTA, RIP };

struct Plan {
    std::vector<Tour> tours;  // tours partition the input node set
    int num_tours = 0;
    bool feasible = false;    // every tour cost <= the fleet distance budget
    std::uint64_t seed = 0;
    PlanMethod method = PlanMethod::MTA;
};

struct PlanStats {
    double cv = 0.0;                     // coefficient of variation of tour costs
    double mean_cost_km = 0.0;
    double mean_edges = 0.0;             // closed n-node tour has n edges (n >= 2)
    std::vector<double> per_tour_costs_km;
};

struct MonteCarloReport {
    int runs = 0;
    double mean_edges_mu = 0.0;
    double mean_edges_var = 0.0;
    double mean_cost_mu_km = 0.0;
    double mean_cost_var_km2 = 0.0;
    std::vector<std::uint64_t> run_seeds;
    std::vector<double> run_mean_edges;
    std::vector<double> run_mean_cost_km;
};

/// Multiple Tour Algorithm: increase the cluster count L from 1, k-means the
/// points into L clusters (seed + L) and build a cheapest-insertion tour per
/// cluster, until every tour fits the fleet distance budget. Terminates at
/// latest when L = |points| (singleton tours of cost 0).
Plan mta(const std::vector<PlanarPoint>& points, const FleetParams& fleet, std::uint64_t seed);

/// Random-initial-placement baseline: seed L tours with distinct random nodes,
/// then repeatedly perform the globally cheapest insertion across all tours.
/// Infeasible plans are returned with feasible = false.
Plan rip(const std::vector<PlanarPoint>& points, std::size_t L, const FleetParams& fleet,
         std::uint64_t seed);

/// Sample standard deviation (n-1 denominator) over mean. Throws
/// DegenerateInput for fewer than 2 costs or non-positive mean.
double coefficient_of_variation(const std::vector<double>& costs);

PlanStats plan_stats(const Plan& plan);

/// Runs MTA per fleet variant with the same seed; returns (m_d km, L) pairs.
std::vector<std::pair<double, int>> sweep_m_d(const std::vector<PlanarPoint>& points,
                                              const std::vector<FleetParams>& variants,
                                              std::uint64_t seed);

/// RIP Monte Carlo at fixed L with per-run seeds seed+1 .. seed+runs.
MonteCarloReport monte_carlo_rip(const std::vector<PlanarPoint>& points, std::size_t L,
                                 const FleetParams& fleet, int runs, std::uint64_t seed);

}  // namespace skytour
