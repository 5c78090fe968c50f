#include "skytour/planner.hpp"

#include "skytour/clustering.hpp"
#include "skytour/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace skytour {

Plan mta(const std::vector<PlanarPoint>& points, const FleetParams& fleet, std::uint64_t seed) {
    if (points.empty()) throw InputError("mta needs at least one point");
    const DistanceMatrix D = distance_matrix(points);
    const double budget_m = fleet.max_distance_m();

    for (std::size_t L = 1; L <= points.size(); ++L) {
        const Clustering clusters = kmeans(points, L, seed + L);
        Plan plan;
        plan.method = PlanMethod::MTA;
        plan.seed = seed;
        bool feasible = true;
        for (const auto& subset : cluster_subsets(clusters)) {
            Tour tour = cia_tour(D, subset);
            feasible = feasible && tour.cost_m <= budget_m;
            plan.tours.push_back(std::move(tour));
        }
        plan.num_tours = static_cast<int>(plan.tours.size());
        plan.feasible = feasible;
        if (feasible) return plan;
    }
    // Unreachable: L = |points| yields singleton tours of cost 0.
    throw std::logic_error("mta failed to terminate");
}

Plan rip(const std::vector<PlanarPoint>& points, std::size_t L, const FleetParams& fleet,
         std::uint64_t seed) {
    if (points.empty()) throw InputError("rip needs at least one point");
    if (L < 1 || L > points.size()) throw LTooLarge(L, points.size());
    const DistanceMatrix D = distance_matrix(points);

    // L distinct random seed nodes (partial Fisher-Yates).
    std::mt19937_64 rng(seed);
    std::vector<int> pool(points.size());
    std::iota(pool.begin(), pool.end(), 0);
    Plan plan;
    plan.method = PlanMethod::RIP;
    plan.seed = seed;
    std::vector<char> placed(points.size(), 0);
    for (std::size_t t = 0; t < L; ++t) {
        const std::size_t pick = t + rng() % (pool.size() - t);
        std::swap(pool[t], pool[pick]);
        plan.tours.push_back({{pool[t]}, 0.0});
        placed[static_cast<std::size_t>(pool[t])] = 1;
    }

    std::size_t remaining = points.size() - L;
    while (remaining > 0) {
        double best_delta = std::numeric_limits<double>::infinity();
        int best_node = -1;
        std::size_t best_tour = 0, best_edge = 0;
        for (int k = 0; k < static_cast<int>(points.size()); ++k) {
            if (placed[static_cast<std::size_t>(k)]) continue;
            for (std::size_t t = 0; t < plan.tours.size(); ++t) {
                const auto& order = plan.tours[t].order;
                const std::size_t m = order.size();
                if (m == 1) {
                    const double delta = 2.0 * D(order[0], k);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_node = k;
                        best_tour = t;
                        best_edge = 0;
                    }
                    continue;
                }
                for (std::size_t e = 0; e < m; ++e) {
                    const int i = order[e];
                    const int j = order[(e + 1) % m];
                    const double delta = D(i, k) + D(k, j) - D(i, j);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_node = k;
                        best_tour = t;
                        best_edge = e;
                    }
                }
            }
        }
        auto& tour = plan.tours[best_tour];
        tour.order.insert(tour.order.begin() + static_cast<std::ptrdiff_t>(best_edge) + 1,
                          best_node);
        tour.cost_m += best_delta;
        placed[static_cast<std::size_t>(best_node)] = 1;
        --remaining;
    }

    plan.num_tours = static_cast<int>(plan.tours.size());
    const double budget_m = fleet.max_distance_m();
    plan.feasible = std::all_of(plan.tours.begin(), plan.tours.end(),
                                [&](const Tour& t) { return t.cost_m <= budget_m; });
    return plan;
}

double coefficient_of_variation(const std::vector<double>& costs) {
    if (costs.size() < 2) throw DegenerateInput("coefficient of variation needs >= 2 costs");
    const double mean = std::accumulate(costs.begin(), costs.end(), 0.0) /
                        static_cast<double>(costs.size());
    if (mean <= 0.0) throw DegenerateInput("coefficient of variation needs positive mean");
    double ss = 0.0;
    for (double c : costs) ss += (c - mean) * (c - mean);
    const double std_dev = std::sqrt(ss / static_cast<double>(costs.size() - 1));
    return std_dev / mean;
}

PlanStats plan_stats(const Plan& plan) {
    if (plan.tours.empty()) throw InputError("plan_stats needs a non-empty plan");
    PlanStats stats;
    double edge_sum = 0.0;
    for (const auto& tour : plan.tours) {
        stats.per_tour_costs_km.push_back(tour.cost_m / 1000.0);
        edge_sum += tour.order.size() >= 2 ? static_cast<double>(tour.order.size()) : 0.0;
    }
    const auto n = static_cast<double>(plan.tours.size());
    stats.mean_edges = edge_sum / n;
    stats.mean_cost_km = std::accumulate(stats.per_tour_costs_km.begin(),
                                         stats.per_tour_costs_km.end(), 0.0) / n;
    if (stats.per_tour_costs_km.size() >= 2 && stats.mean_cost_km > 0.0)
        stats.cv = coefficient_of_variation(stats.per_tour_costs_km);
    return stats;
}

std::vector<std::pair<double, int>> sweep_m_d(const std::vector<PlanarPoint>& points,
                                              const std::vector<FleetParams>& variants,
                                              std::uint64_t seed) {
    std::vector<std::pair<double, int>> result;
    result.reserve(variants.size());
    for (const auto& fleet : variants) {
        const Plan plan = mta(points, fleet, seed);
        result.emplace_back(fleet.max_distance_km(), plan.num_tours);
    }
    return result;
}

MonteCarloReport monte_carlo_rip(const std::vector<PlanarPoint>& points, std::size_t L,
                                 const FleetParams& fleet, int runs, std::uint64_t seed) {
    if (runs < 1) throw InputError("monte_carlo_rip needs at least one run");
    MonteCarloReport report;
    report.runs = runs;
    for (int r = 1; r <= runs; ++r) {
        const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(r);
        const Plan plan = rip(points, L, fleet, run_seed);
        const PlanStats stats = plan_stats(plan);
        report.run_seeds.push_back(run_seed);
        report.run_mean_edges.push_back(stats.mean_edges);
        report.run_mean_cost_km.push_back(stats.mean_cost_km);
    }
    auto mean_of = [](const std::vector<double>& v) {
        return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    };
    auto var_of = [](const std::vector<double>& v, double mu) {
        double ss = 0.0;
        for (double x : v) ss += (x - mu) * (x - mu);
        return ss / static_cast<double>(v.size());
    };
    report.mean_edges_mu = mean_of(report.run_mean_edges);
    report.mean_edges_var = var_of(report.run_mean_edges, report.mean_edges_mu);
    report.mean_cost_mu_km = mean_of(report.run_mean_cost_km);
    report.mean_cost_var_km2 = var_of(report.run_mean_cost_km, report.mean_cost_mu_km);
    return report;
}

}  // namespace skytour
