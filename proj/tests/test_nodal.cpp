#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nodal/nodal.hpp"

using namespace nodal;

TEST_CASE("family evaluation") {
    Theta t = make_theta(0.3);
    for (double x : {0.2, 1.1})
        for (double y : {0.4, 2.7}) {
            double want = std::cos(0.3) * std::cos(2 * x) * std::cos(y) +
                          std::sin(0.3) * std::cos(x) * std::cos(2 * y);
            CHECK(std::abs(eval_phi(2, 1, t, x, y) - want) < 1e-14);
        }
}

TEST_CASE("automatic grid sizes") {
    CHECK(base_resolution(8, 3) == 512);
    CHECK(base_resolution(2, 1) == 128);
    CHECK(base_resolution(0, 0) == 64);
}

TEST_CASE("certified counts at pinned angles") {
    auto count = [](int p, int q, double th) {
        NodalReport r = count_nodal_domains(p, q, make_theta(th));
        REQUIRE(r.certified);
        return r.count;
    };
    CHECK(count(2, 1, 0.0) == 6);
    CHECK(count(2, 1, M_PI / 8) == 4);
    CHECK(count(2, 1, M_PI / 4) == 4);
    CHECK(count(4, 1, M_PI / 4) == 10);
    CHECK(count(3, 1, M_PI / 4) == 8);
    CHECK(count(2, 2, 0.0) == 9);
    CHECK(count(1, 0, M_PI / 4) == 2);
    CHECK(count(2, 0, M_PI / 4) == 5);
    CHECK(count(2, 0, 3 * M_PI / 4) == 4);
    CHECK(count(4, 0, M_PI / 4) == 13);
    CHECK(count(4, 0, 3 * M_PI / 4) == 12);
    CHECK(count(3, 3, 0.0) == 16);
    CHECK(count(0, 0, 0.0) == 1);
}

TEST_CASE("counts are symmetric in the pair order") {
    NodalReport a = count_nodal_domains(2, 1, make_theta(0.2));
    NodalReport b = count_nodal_domains(1, 2, make_theta(M_PI / 2 - 0.2));
    CHECK(a.count == b.count);
    NodalReport c = count_nodal_domains(1, 2, make_theta(0.2));
    NodalReport d = count_nodal_domains(2, 1, make_theta(M_PI / 2 - 0.2));
    CHECK(c.count == d.count);
}

TEST_CASE("report carries boundary data") {
    NodalReport r = count_nodal_domains(2, 1, make_theta(M_PI / 8));
    CHECK(r.boundary_touches[0] == 1);  // x = 0
    CHECK(r.boundary_touches[1] == 1);  // x = pi
    CHECK(r.boundary_touches[2] == 2);  // y = 0
    CHECK(r.boundary_touches[3] == 2);  // y = pi
    CHECK(!r.corner_hits[0]);

    NodalReport s = count_nodal_domains(2, 1, make_theta(3 * M_PI / 4));
    CHECK(s.corner_hits[0]);   // (0,0): c+s = 0 there
    CHECK(!s.corner_hits[1]);
    CHECK(!s.corner_hits[2]);
    CHECK(s.corner_hits[3]);

    CHECK(r.interior_criticals.empty());  // (2,1) has none
    NodalReport u = count_nodal_domains(4, 1, make_theta(0.3));
    CHECK(u.interior_criticals.size() == 2);
}

TEST_CASE("resolution override") {
    NodalReport r = count_nodal_domains(2, 1, make_theta(0.0), 256);
    CHECK(r.count == 6);
    CHECK_THROWS_AS(count_nodal_domains(2, 1, make_theta(0.0), 16), std::domain_error);
}

TEST_CASE("grid counts stabilize under refinement") {
    Theta t = make_theta(0.3);
    CHECK(grid_count(5, 2, t, 320) == grid_count(5, 2, t, 640));
    CHECK(grid_count(5, 2, t, 320) == grid_count(5, 2, t, 416));
}

TEST_CASE("separable and family count formulas") {
    CHECK(product_count(4, 2) == 15);
    CHECK(p0_max_count(3) == 8);
    CHECK(p0_max_count(4) == 13);
    CHECK(p0_max_count(6) == 25);
    CHECK(touching_lower_bound(5, 2) == 14);
    CHECK(mu_lower(5, 2) == 8);
}

TEST_CASE("sweep across the mixing angle") {
    SweepResult s = sweep_theta(4, 1, 8);
    REQUIRE(!s.points.empty());
    CHECK(s.max_count == 10);
    CHECK(std::abs(s.argmax_theta) < 1e-12);
    for (const auto& pt : s.points) CHECK(pt.certified);

    // the profile steps down from 10 to 6, bumps to 8 at the critical angle,
    // then returns to 10 at the diagonal angle
    bool found_critical = false;
    for (const auto& pt : s.points) {
        if (std::abs(pt.theta.value - 0.598882536849476) < 1e-9) {
            found_critical = true;
            CHECK(pt.count == 8);
            CHECK(pt.at_critical);
        } else if (pt.theta.value > 0.05 && pt.theta.value < 0.55) {
            CHECK(pt.count == 6);
        } else if (pt.theta.value > 0.65 && pt.theta.value < M_PI / 4 - 1e-9) {
            CHECK(pt.count == 8);
        }
    }
    CHECK(found_critical);
    CHECK(s.points.back().count == 10);  // theta = pi/4

    bool has_angle = false;
    for (double a : s.critical_thetas)
        if (std::abs(a - 0.598882536849476) < 1e-9) has_angle = true;
    CHECK(has_angle);
}

TEST_CASE("sweep parity stays even when p+q is odd") {
    SweepResult s = sweep_theta(3, 2, 6);
    for (const auto& pt : s.points) {
        REQUIRE(pt.certified);
        CHECK(pt.count % 2 == 0);
        CHECK(pt.count >= 6);
    }
    CHECK(s.max_count == 12);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(count_nodal_domains(-1, 0, make_theta(0.0)), std::domain_error);
    CHECK_THROWS_AS(sweep_theta(2, 2, 4), std::domain_error);
    CHECK_THROWS_AS(grid_count(2, 1, make_theta(0.0), 1), std::domain_error);
}
