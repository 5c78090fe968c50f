#include "skytour/geometry.hpp"
#include "skytour/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace skytour;

namespace {

Subarea square_subarea(double size, double h_max, const std::string& id = "sq") {
    return {id, {{0.0, 0.0}, {size, 0.0}, {size, size}, {0.0, size}}, h_max};
}

// h_max that yields a given radius under the paper-style parameters.
double h_max_for_radius(double r, const LosParams& p) {
    return p.h_v_m + (p.h_u_m - p.h_v_m) * p.w_bv_m / r;
}

}  // namespace

TEST_CASE("projection maps origin to zero and 1 degree north to ~111320 m") {
    const GeoPoint origin{35.0, 33.0};
    CHECK(project_one(origin, origin).norm() == doctest::Approx(0.0));
    const PlanarPoint north = project_one({36.0, 33.0}, origin);
    CHECK(north.y() == doctest::Approx(111320.0).epsilon(1e-9));
    CHECK(north.x() == doctest::Approx(0.0));
}

TEST_CASE("projection is symmetric about the origin and invertible") {
    const GeoPoint origin{35.0, 33.0};
    const PlanarPoint a = project_one({35.01, 33.02}, origin);
    const PlanarPoint b = project_one({34.99, 32.98}, origin);
    CHECK(a.x() == doctest::Approx(-b.x()));
    CHECK(a.y() == doctest::Approx(-b.y()));

    const GeoPoint back = unproject_one(a, origin);
    CHECK(back.lat == doctest::Approx(35.01).epsilon(1e-12));
    CHECK(back.lon == doctest::Approx(33.02).epsilon(1e-12));
}

TEST_CASE("projection rejects non-finite input") {
    CHECK_THROWS_AS(project_one({std::nan(""), 0.0}, {0.0, 0.0}), InputError);
}

TEST_CASE("los_angles boundary and visibility cases") {
    SUBCASE("theta equals phi directly under the building line") {
        const auto a = los_angles(0.0, 4.0, 500.0, 500.0, 2.0);
        CHECK(a.tan_theta == doctest::Approx(4.0 / 498.0));
        CHECK(a.tan_phi == doctest::Approx(4.0 / 498.0));
        CHECK(a.visible());
    }
    SUBCASE("exactly at the radius limit") {
        // w_UB + w_BV equals the detection radius 664 for h_B = 5.
        const auto a = los_angles(660.0, 4.0, 500.0, 5.0, 2.0);
        CHECK(a.tan_theta == doctest::Approx(664.0 / 498.0));
        CHECK(a.tan_phi == doctest::Approx(4.0 / 3.0));
        CHECK(a.visible());
    }
    SUBCASE("beyond the radius is not visible") {
        const auto a = los_angles(1000.0, 4.0, 500.0, 5.0, 2.0);
        CHECK(a.tan_theta == doctest::Approx(1004.0 / 498.0));
        CHECK(a.tan_phi == doctest::Approx(4.0 / 3.0));
        // 1000 m is beyond R = 664 m; the d <= R coverage test rules this
        // pairing out, not the angle predicate.
        CHECK(1000.0 + 4.0 > 664.0);
    }
    SUBCASE("degenerate heights throw") {
        CHECK_THROWS_AS(los_angles(1.0, 4.0, 2.0, 5.0, 2.0), DegenerateInput);
        CHECK_THROWS_AS(los_angles(1.0, 4.0, 500.0, 2.0, 2.0), DegenerateInput);
    }
}

TEST_CASE("los_radius reproduces the published (h_M, R) pairs") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const std::vector<std::pair<double, double>> pairs = {
        {5.0, 664.0}, {5.5, 569.1}, {8.0, 332.0}, {10.0, 249.0}, {11.5, 209.7}, {13.5, 173.2},
        {17.0, 132.8}, {24.0, 90.5}, {38.0, 55.3}, {45.0, 46.3}, {52.0, 39.8}};
    for (const auto& [h, r] : pairs)
        CHECK(std::abs(los_radius(h, p) - r) <= 0.05);
}

TEST_CASE("los_radius degenerate and cap behaviour") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    CHECK(los_radius(p.h_u_m, p) == doctest::Approx(p.w_bv_m));  // h_M = h_U
    CHECK(los_radius(2.0, p) == doctest::Approx(p.r_max_m));     // h_M <= h_V clamps
    CHECK(los_radius(1.0, p) == doctest::Approx(p.r_max_m));
    CHECK(los_radius(3.0, p) == doctest::Approx(p.r_max_m));     // cap binds for low buildings
}

TEST_CASE("los_radius is strictly decreasing in h_M once the cap stops binding") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    double prev = los_radius(4.5, p);
    for (double h = 5.0; h < 100.0; h += 0.5) {
        const double r = los_radius(h, p);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("build_grid matches the lattice counting oracle") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const double h = h_max_for_radius(50.0, p);
    const Subarea sub = square_subarea(100.0, h);
    REQUIRE(los_radius(h, p) == doctest::Approx(50.0));

    SUBCASE("rho = 5 gives a 9x9 interior lattice") {
        const auto sites = build_grid({sub}, 5, p);
        CHECK(static_cast<int>(sites.size()) == oracles::lattice_count_in_rect(100.0, 100.0, 10.0));
        CHECK(sites.size() == 81);
    }
    SUBCASE("rho = 1 gives the single center point") {
        const auto sites = build_grid({sub}, 1, p);
        REQUIRE(sites.size() == 1);
        CHECK(sites[0].position.x() == doctest::Approx(50.0));
        CHECK(sites[0].position.y() == doctest::Approx(50.0));
    }
}

TEST_CASE("build_grid keeps every site strictly inside its polygon") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const Subarea tri{"tri", {{0.0, 0.0}, {200.0, 0.0}, {0.0, 200.0}}, 24.0};
    const auto sites = build_grid({tri}, 3, p);
    CHECK(!sites.empty());
    for (const auto& s : sites) CHECK(point_in_polygon(s.position, tri.boundary));
}

TEST_CASE("build_grid on a degenerate subarea yields 0 or 1 sites without error") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const Subarea tiny{"tiny", {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, 5.0};
    const auto sites = build_grid({tiny}, 1, p);  // spacing 664 m >> 1 m cell
    CHECK(sites.size() <= 1);
}

TEST_CASE("build_grid doubling rho at least quadruples sites on a large convex subarea") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const Subarea sub = square_subarea(1000.0, 24.0);  // R = 90.5 m
    const auto coarse = build_grid({sub}, 2, p);
    const auto dense = build_grid({sub}, 4, p);
    CHECK(dense.size() >= 4 * coarse.size());
}

TEST_CASE("build_grid overlap goes to the first-listed subarea") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const Subarea a = square_subarea(100.0, h_max_for_radius(50.0, p), "a");
    Subarea b = a;
    b.id = "b";
    const auto sites = build_grid({a, b}, 5, p);
    CHECK(sites.size() == 81);
    for (const auto& s : sites) CHECK(s.subarea_id == "a");
}

TEST_CASE("sample_pois arc-length walk") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    RoadNetwork net;

    SUBCASE("straight 100 m segment at 50 m spacing") {
        net.segments.push_back({{{0.0, 0.0}, {100.0, 0.0}}, RoadClass::primary});
        const auto pois = sample_pois(net, 50.0, {}, p);
        REQUIRE(pois.size() == 3);
        CHECK(pois[0].position.x() == doctest::Approx(0.0));
        CHECK(pois[1].position.x() == doctest::Approx(50.0));
        CHECK(pois[2].position.x() == doctest::Approx(100.0));
    }
    SUBCASE("short segment keeps both endpoints") {
        net.segments.push_back({{{0.0, 0.0}, {10.0, 0.0}}, RoadClass::primary});
        const auto pois = sample_pois(net, 50.0, {}, p);
        CHECK(pois.size() == 2);
    }
    SUBCASE("L-shaped polyline 60 + 60 m") {
        net.segments.push_back({{{0.0, 0.0}, {60.0, 0.0}, {60.0, 60.0}}, RoadClass::primary});
        const auto pois = sample_pois(net, 50.0, {}, p);
        REQUIRE(pois.size() == 4);
        // Arc lengths {0, 50, 100, 120}
        CHECK(pois[1].position.x() == doctest::Approx(50.0));
        CHECK(pois[1].position.y() == doctest::Approx(0.0));
        CHECK(pois[2].position.x() == doctest::Approx(60.0));
        CHECK(pois[2].position.y() == doctest::Approx(40.0));
        CHECK(pois[3].position.y() == doctest::Approx(60.0));
    }
}

TEST_CASE("sample_pois consecutive spacing bound and endpoint presence") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    RoadNetwork net;
    net.segments.push_back(
        {{{0.0, 0.0}, {37.0, 11.0}, {80.0, 3.0}, {123.0, 55.0}}, RoadClass::secondary});
    const double spacing = 20.0;
    const auto pois = sample_pois(net, spacing, {}, p);
    REQUIRE(pois.size() >= 2);
    CHECK(pois.front().position.x() == doctest::Approx(0.0));
    CHECK(pois.back().position.x() == doctest::Approx(123.0));
    for (std::size_t i = 0; i + 1 < pois.size(); ++i) {
        // Chord length lower-bounds arc length, but both marks lie on the line,
        // so consecutive PoIs are at most `spacing` apart along the walk.
        CHECK((pois[i + 1].position - pois[i].position).norm() <= spacing + 1e-6);
    }
}

TEST_CASE("sample_pois radius comes from the enclosing subarea, default elsewhere") {
    const LosParams p{2.0, 500.0, 4.0, 1000.0};
    const Subarea sub = square_subarea(100.0, 24.0);  // R = 90.5 roughly
    RoadNetwork net;
    net.segments.push_back({{{10.0, 50.0}, {90.0, 50.0}}, RoadClass::primary});    // inside
    net.segments.push_back({{{210.0, 50.0}, {290.0, 50.0}}, RoadClass::primary});  // outside
    const auto pois = sample_pois(net, 1000.0, {sub}, p, 10.0);
    REQUIRE(pois.size() == 4);
    CHECK(pois[0].radius_m == doctest::Approx(los_radius(24.0, p)));
    CHECK(pois[2].radius_m == doctest::Approx(los_radius(10.0, p)));
}

TEST_CASE("point_in_polygon treats boundary as outside") {
    const std::vector<PlanarPoint> sq = {{0.0, 0.0}, {10.0, 0.0}, {10.0, 10.0}, {0.0, 10.0}};
    CHECK(point_in_polygon({5.0, 5.0}, sq));
    CHECK_FALSE(point_in_polygon({0.0, 5.0}, sq));
    CHECK_FALSE(point_in_polygon({5.0, 0.0}, sq));
    CHECK_FALSE(point_in_polygon({15.0, 5.0}, sq));
}
