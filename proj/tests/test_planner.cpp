#include "skytour/planner.hpp"
#include "skytour/clustering.hpp"
#include "skytour/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace skytour;

namespace {

FleetParams fleet_for_md(double md_km) { return {md_km * 2.0, 30.0}; }  // v*t/60 = md

std::vector<PlanarPoint> grid_points(int nx, int ny, double step_m) {
    std::vector<PlanarPoint> pts;
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) pts.push_back({x * step_m, y * step_m});
    return pts;
}

void check_partition(const Plan& plan, std::size_t n) {
    std::vector<int> seen;
    for (const auto& t : plan.tours) seen.insert(seen.end(), t.order.begin(), t.order.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(seen == expected);
}

}  // namespace

TEST_CASE("fleet budget: 40 km/h for 30 min is exactly 20 km") {
    const FleetParams fleet{40.0, 30.0};
    CHECK(fleet.max_distance_km() == 20.0);
    CHECK(fleet.max_distance_m() == 20000.0);
}

TEST_CASE("mta degenerate cases") {
    SUBCASE("single point is one zero-cost tour") {
        const Plan plan = mta({{5.0, 5.0}}, fleet_for_md(1.0), 1);
        CHECK(plan.num_tours == 1);
        CHECK(plan.feasible);
        CHECK(plan.tours[0].cost_m == 0.0);
    }
    SUBCASE("two points 10 km apart with a 15 km budget need two tours") {
        // L = 1: the two-node tour costs 20 km > 15 km; L = 2: singletons.
        const Plan plan = mta({{0.0, 0.0}, {10000.0, 0.0}}, fleet_for_md(15.0), 1);
        CHECK(plan.num_tours == 2);
        CHECK(plan.feasible);
        for (const auto& t : plan.tours) CHECK(t.cost_m == 0.0);
    }
    SUBCASE("unit square at km scale fits a 5 km budget in one tour") {
        const std::vector<PlanarPoint> pts = {
            {0.0, 0.0}, {1000.0, 0.0}, {1000.0, 1000.0}, {0.0, 1000.0}};
        const Plan plan = mta(pts, fleet_for_md(5.0), 1);
        CHECK(plan.num_tours == 1);
        CHECK(plan.tours[0].cost_m == doctest::Approx(4000.0));
        const double optimal = oracles::brute_force_tsp(distance_matrix(pts), {0, 1, 2, 3});
        CHECK(plan.tours[0].cost_m == doctest::Approx(optimal));
    }
}

TEST_CASE("mta returns a feasible partition and the first feasible L") {
    const auto pts = grid_points(6, 6, 400.0);
    const FleetParams fleet = fleet_for_md(6.0);
    const std::uint64_t seed = 3;
    const Plan plan = mta(pts, fleet, seed);

    CHECK(plan.feasible);
    for (const auto& t : plan.tours) CHECK(t.cost_m <= fleet.max_distance_m());
    check_partition(plan, pts.size());

    // Replay: every smaller L must have had an over-budget cluster tour.
    const auto D = distance_matrix(pts);
    for (int L = 1; L < plan.num_tours; ++L) {
        const auto clusters = kmeans(pts, static_cast<std::size_t>(L), seed + L);
        bool any_over = false;
        for (const auto& subset : cluster_subsets(clusters))
            any_over = any_over || cia_tour(D, subset).cost_m > fleet.max_distance_m();
        CHECK(any_over);
    }
}

TEST_CASE("mta is deterministic for a fixed seed") {
    const auto pts = grid_points(5, 5, 300.0);
    const Plan a = mta(pts, fleet_for_md(4.0), 17);
    const Plan b = mta(pts, fleet_for_md(4.0), 17);
    REQUIRE(a.num_tours == b.num_tours);
    for (int t = 0; t < a.num_tours; ++t) {
        CHECK(a.tours[static_cast<std::size_t>(t)].order == b.tours[static_cast<std::size_t>(t)].order);
        CHECK(a.tours[static_cast<std::size_t>(t)].cost_m == b.tours[static_cast<std::size_t>(t)].cost_m);
    }
}

TEST_CASE("rip basics") {
    const auto pts = grid_points(4, 4, 100.0);

    SUBCASE("saturated L gives all singletons") {
        const Plan plan = rip(pts, pts.size(), fleet_for_md(1.0), 5);
        CHECK(plan.num_tours == static_cast<int>(pts.size()));
        for (const auto& t : plan.tours) CHECK(t.cost_m == 0.0);
        check_partition(plan, pts.size());
    }
    SUBCASE("L = 1 visits all nodes") {
        const Plan plan = rip(pts, 1, fleet_for_md(100.0), 5);
        CHECK(plan.num_tours == 1);
        check_partition(plan, pts.size());
        const auto D = distance_matrix(pts);
        CHECK(plan.tours[0].cost_m ==
              doctest::Approx(tour_cost(plan.tours[0], D)).epsilon(1e-9));
    }
    SUBCASE("L beyond the point count throws") {
        CHECK_THROWS_AS(rip(pts, pts.size() + 1, fleet_for_md(1.0), 5), LTooLarge);
    }
    SUBCASE("infeasible plans are returned, flagged") {
        const Plan plan = rip(pts, 1, fleet_for_md(0.001), 5);
        CHECK_FALSE(plan.feasible);
        CHECK(plan.num_tours == 1);
    }
    SUBCASE("fixed seed replays identically") {
        const Plan a = rip(pts, 3, fleet_for_md(10.0), 123);
        const Plan b = rip(pts, 3, fleet_for_md(10.0), 123);
        for (int t = 0; t < 3; ++t)
            CHECK(a.tours[static_cast<std::size_t>(t)].order ==
                  b.tours[static_cast<std::size_t>(t)].order);
    }
}

TEST_CASE("coefficient_of_variation") {
    CHECK(coefficient_of_variation({10.0, 10.0, 10.0}) == doctest::Approx(0.0));
    CHECK(coefficient_of_variation({10.0, 20.0}) == doctest::Approx(0.4714).epsilon(1e-3));
    SUBCASE("scale invariance") {
        std::mt19937_64 rng(8);
        std::vector<double> costs;
        for (int i = 0; i < 10; ++i) costs.push_back(1.0 + (rng() >> 11) * 0x1.0p-53 * 9.0);
        std::vector<double> scaled = costs;
        for (double& c : scaled) c *= 17.5;
        CHECK(coefficient_of_variation(scaled) ==
              doctest::Approx(coefficient_of_variation(costs)).epsilon(1e-12));
    }
    SUBCASE("degenerate inputs throw") {
        CHECK_THROWS_AS(coefficient_of_variation({1.0}), DegenerateInput);
        CHECK_THROWS_AS(coefficient_of_variation({0.0, 0.0}), DegenerateInput);
        CHECK_THROWS_AS(coefficient_of_variation({-2.0, 1.0}), DegenerateInput);
    }
}

TEST_CASE("plan_stats") {
    SUBCASE("one closed 4-node tour has 4 edges") {
        Plan plan;
        plan.tours.push_back({{0, 1, 2, 3}, 4000.0});
        plan.num_tours = 1;
        const PlanStats s = plan_stats(plan);
        CHECK(s.mean_edges == 4.0);
        CHECK(s.mean_cost_km == doctest::Approx(4.0));
        CHECK(s.cv == 0.0);  // single tour
    }
    SUBCASE("two singleton tours") {
        Plan plan;
        plan.tours.push_back({{0}, 0.0});
        plan.tours.push_back({{1}, 0.0});
        plan.num_tours = 2;
        const PlanStats s = plan_stats(plan);
        CHECK(s.mean_edges == 0.0);
        CHECK(s.mean_cost_km == 0.0);
    }
    SUBCASE("costs 10 and 20 km give cv 0.4714") {
        Plan plan;
        plan.tours.push_back({{0, 1}, 10000.0});
        plan.tours.push_back({{2, 3}, 20000.0});
        plan.num_tours = 2;
        const PlanStats s = plan_stats(plan);
        CHECK(s.cv == doctest::Approx(0.4714).epsilon(1e-3));
        CHECK(s.mean_edges == 2.0);
    }
}

TEST_CASE("sweep_m_d endpoints and monotonicity") {
    const auto pts = grid_points(5, 5, 500.0);
    std::vector<FleetParams> variants;
    for (double md : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) variants.push_back(fleet_for_md(md));
    const auto sweep = sweep_m_d(pts, variants, 7);

    REQUIRE(sweep.size() == variants.size());
    for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].second <= sweep[i - 1].second);
    CHECK(sweep.back().second == 1);  // 64 km certainly exceeds any single tour

    // A budget below any 2-node tour saturates L.
    std::vector<FleetParams> tiny = {fleet_for_md(0.1)};
    CHECK(sweep_m_d(pts, tiny, 7)[0].second == static_cast<int>(pts.size()));
}

TEST_CASE("monte_carlo_rip") {
    const auto pts = grid_points(5, 4, 200.0);
    const FleetParams fleet = fleet_for_md(20.0);

    SUBCASE("single run has zero variance") {
        const auto r = monte_carlo_rip(pts, 3, fleet, 1, 9);
        CHECK(r.mean_cost_var_km2 == 0.0);
        CHECK(r.mean_edges_var == 0.0);
    }
    SUBCASE("saturated L gives zero costs") {
        const auto r = monte_carlo_rip(pts, pts.size(), fleet, 5, 9);
        CHECK(r.mean_cost_mu_km == 0.0);
        CHECK(r.mean_cost_var_km2 == 0.0);
    }
    SUBCASE("identical seeds replay identically") {
        const auto a = monte_carlo_rip(pts, 3, fleet, 10, 9);
        const auto b = monte_carlo_rip(pts, 3, fleet, 10, 9);
        CHECK(a.run_mean_cost_km == b.run_mean_cost_km);
        CHECK(a.run_mean_edges == b.run_mean_edges);
        CHECK(a.run_seeds == b.run_seeds);
    }
    SUBCASE("statistics recompute from stored per-run values") {
        const auto r = monte_carlo_rip(pts, 4, fleet, 20, 9);
        const double mu = std::accumulate(r.run_mean_cost_km.begin(), r.run_mean_cost_km.end(),
                                          0.0) / 20.0;
        CHECK(r.mean_cost_mu_km == doctest::Approx(mu).epsilon(1e-12));
    }
}

TEST_CASE("MTA beats the RIP mean at equal L on a synthetic instance") {
    // Irregular city-scale scatter; on perfectly regular lattices with tiny L
    // the two heuristics can trade places.
    std::mt19937_64 gen(4242);
    std::vector<PlanarPoint> pts;
    for (int i = 0; i < 60; ++i)
        pts.push_back({(gen() >> 11) * 0x1.0p-53 * 3000.0, (gen() >> 11) * 0x1.0p-53 * 3000.0});
    const FleetParams fleet = fleet_for_md(2.0);
    const Plan plan = mta(pts, fleet, 11);
    REQUIRE(plan.num_tours >= 2);
    const PlanStats mta_stats = plan_stats(plan);
    const auto mc = monte_carlo_rip(pts, static_cast<std::size_t>(plan.num_tours), fleet, 100, 11);
    CHECK(mc.mean_cost_mu_km >= mta_stats.mean_cost_km);
}
