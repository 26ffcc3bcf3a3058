#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nodal/levels.hpp"

using namespace nodal;

TEST_CASE("two-adic valuation and shared zeros") {
    CHECK(v2(8) == 3);
    CHECK(v2(12) == 2);
    CHECK(v2(7) == 0);
    CHECK(common_cosine_zeros(3, 1));
    CHECK(common_cosine_zeros(5, 3));
    CHECK(common_cosine_zeros(6, 2));
    CHECK(!common_cosine_zeros(2, 1));
    CHECK(!common_cosine_zeros(4, 2));
    CHECK(!common_cosine_zeros(8, 3));

    auto z31 = common_zero_positions(3, 1);
    REQUIRE(z31.size() == 1);
    CHECK(std::abs(z31[0] - M_PI / 2) < 1e-12);

    auto z62 = common_zero_positions(6, 2);
    REQUIRE(z62.size() == 2);
    CHECK(std::abs(z62[0] - M_PI / 4) < 1e-12);
    CHECK(std::abs(z62[1] - 3 * M_PI / 4) < 1e-12);

    // odd parts share a factor: every zero of cos(3x) is shared, not just pi/2
    auto z93 = common_zero_positions(9, 3);
    REQUIRE(z93.size() == 3);
    CHECK(std::abs(z93[0] - M_PI / 6) < 1e-12);
    CHECK(std::abs(z93[1] - M_PI / 2) < 1e-12);
    CHECK(std::abs(z93[2] - 5 * M_PI / 6) < 1e-12);
}

TEST_CASE("regularized ratio values and poles") {
    // removable singularity filled by polynomial division
    CHECK(std::abs(f_ratio(3, 1, M_PI / 2) - (-3.0)) < 1e-9);
    CHECK(!f_is_pole(3, 1, M_PI / 2));

    CHECK(f_is_pole(2, 1, M_PI / 2));
    double v = f_ratio(2, 1, M_PI / 2);
    CHECK(std::isinf(v));
    CHECK(v < 0);  // left-limit sign

    // plain points match the naive quotient
    for (double x : {0.3, 1.0, 2.2})
        CHECK(std::abs(f_ratio(5, 2, x) - std::cos(5 * x) / std::cos(2 * x)) < 1e-10);
}

TEST_CASE("tangent equation roots") {
    CHECK(solve_tangent_equation(2, 1).empty());
    CHECK(solve_tangent_equation(3, 1).empty());

    auto r41 = solve_tangent_equation(4, 1);
    REQUIRE(r41.size() == 2);
    CHECK(std::abs(r41[0] - 0.855437183041961) < 1e-9);
    CHECK(std::abs(r41[1] - (M_PI - 0.855437183041961)) < 1e-9);
    CHECK(std::abs(f_ratio(4, 1, r41[0]) - (-1.465206667598664)) < 1e-8);

    auto r52 = solve_tangent_equation(5, 2);
    REQUIRE(r52.size() == 2);
    CHECK(std::abs(r52[0] - 1.181458560619598) < 1e-9);
    CHECK(std::abs(r52[1] - 1.960134092970195) < 1e-9);

    auto r83 = solve_tangent_equation(8, 3);
    REQUIRE(r83.size() == 4);
    CHECK(std::abs(r83[0] - 0.722269034789776) < 1e-9);
    CHECK(std::abs(r83[1] - 1.201167434671813) < 1e-9);
    CHECK(std::abs(r83[2] - 1.940425218917980) < 1e-9);
    CHECK(std::abs(r83[3] - 2.419323618800017) < 1e-9);

    // gcd reduction cases land on exact rational multiples of pi
    auto r42 = solve_tangent_equation(4, 2);
    REQUIRE(r42.size() == 1);
    CHECK(std::abs(r42[0] - M_PI / 2) < 1e-10);

    auto r63 = solve_tangent_equation(6, 3);
    REQUIRE(r63.size() == 2);
    CHECK(std::abs(r63[0] - M_PI / 3) < 1e-10);
    CHECK(std::abs(r63[1] - 2 * M_PI / 3) < 1e-10);

    auto r84 = solve_tangent_equation(8, 4);
    REQUIRE(r84.size() == 3);
    CHECK(std::abs(r84[0] - M_PI / 4) < 1e-10);
    CHECK(std::abs(r84[1] - M_PI / 2) < 1e-10);
    CHECK(std::abs(r84[2] - 3 * M_PI / 4) < 1e-10);

    // every root solves the equation
    for (double x : r83)
        CHECK(std::abs(8 * std::sin(8 * x) * std::cos(3 * x) -
                       3 * std::cos(8 * x) * std::sin(3 * x)) < 1e-9);
}

TEST_CASE("critical mixing angles") {
    auto b41 = boundary_critical_thetas(4, 1);
    REQUIRE(b41.size() == 1);
    CHECK(std::abs(b41[0] - 0.598882536849476) < 1e-9);

    auto b52 = boundary_critical_thetas(5, 2);
    REQUIRE(b52.size() == 1);
    CHECK(std::abs(b52[0] - 0.653206066158300) < 1e-9);

    // two extremum magnitudes z2 ~ 1.559, z1 ~ 1.098 give two boundary angles
    auto b83 = boundary_critical_thetas(8, 3);
    REQUIRE(b83.size() == 2);
    CHECK(std::abs(b83[0] - 0.570321037313553) < 1e-9);
    CHECK(std::abs(b83[1] - 0.738678482163505) < 1e-9);

    // the middle transition angle arctan(z1/z2) belongs to the interior family
    bool mid = false;
    for (const auto& c : interior_critical_points(8, 3))
        if (std::abs(c.theta - 0.613633422416156) < 1e-9) mid = true;
    CHECK(mid);
}

TEST_CASE("interior critical points") {
    CHECK(interior_critical_points(2, 1).empty());

    auto ic = interior_critical_points(4, 1);
    REQUIRE(ic.size() == 2);
    for (const auto& c : ic) CHECK(std::abs(c.theta - M_PI / 4) < 1e-12);
}

TEST_CASE("level solution counts at pinned values") {
    CHECK(count_level_solutions(5, 2, 0.5) == 5);
    CHECK(count_level_solutions(4, 1, 1.3) == 3);
    CHECK(count_level_solutions(4, 1, 0.0) == 4);
    CHECK(count_level_solutions(2, 1, -0.414) == 2);
    CHECK(count_level_solutions(3, 1, 0.3) == 3);
    CHECK(count_level_solutions(3, 1, -0.7) == 3);
    CHECK(count_level_solutions(6, 2, 0.3) == 6);
    CHECK(count_level_solutions(5, 3, 0.618) == 5);
    CHECK(count_level_solutions(9, 3, 0.2) == 9);
}

TEST_CASE("level solutions solve the equation and agree with a scan") {
    struct Probe {
        int p, q;
        double t;
    };
    for (const Probe& pr : {Probe{5, 2, 0.37}, Probe{7, 4, -0.61}, Probe{9, 3, 0.2},
                            Probe{6, 2, 0.3}, Probe{11, 6, 0.83}}) {
        auto xs = level_solutions(pr.p, pr.q, pr.t);
        CHECK(static_cast<int>(xs.size()) == count_level_solutions(pr.p, pr.q, pr.t));
        double prev = -1.0;
        for (double x : xs) {
            CHECK(x > prev);
            prev = x;
            CHECK(std::abs(std::cos(pr.p * x) - pr.t * std::cos(pr.q * x)) < 1e-8);
        }
        // dense sign scan of cos(px) - t cos(qx); generic t keeps roots simple
        int m = 40000 * pr.p;
        auto val = [&](double x) { return std::cos(pr.p * x) - pr.t * std::cos(pr.q * x); };
        int crossings = 0;
        double a = val(0.0);
        for (int i = 1; i <= m; ++i) {
            double b = val(i * M_PI / m);
            if ((a < 0 && b > 0) || (a > 0 && b < 0)) ++crossings;
            if (b != 0.0) a = b;
        }
        CHECK(crossings == static_cast<int>(xs.size()));
    }
}

TEST_CASE("boundary zero counts and placement") {
    Theta t = make_theta(M_PI / 8);
    CHECK(boundary_zeros(2, 1, t, Side::X0).size() == 1);
    CHECK(boundary_zeros(2, 1, t, Side::XPI).size() == 1);
    CHECK(boundary_zeros(2, 1, t, Side::Y0).size() == 2);
    CHECK(boundary_zeros(2, 1, t, Side::YPI).size() == 2);

    CHECK(boundary_zeros(3, 2, make_theta(0.3), Side::Y0).size() == 3);

    auto z = boundary_zeros(4, 1, make_theta(0.3), Side::X0);
    REQUIRE(z.size() == 1);
    CHECK(z[0] > M_PI / 2);
    CHECK(z[0] < 5 * M_PI / 8);

    CHECK(std::string(side_name(Side::X0)) == "x=0");
}

TEST_CASE("boundary zeros actually vanish") {
    Theta t = make_theta(0.3);
    for (double y : boundary_zeros(5, 2, t, Side::X0)) {
        double v = t.c * std::cos(0.0) * std::cos(2 * y) + t.s * std::cos(0.0) * std::cos(5 * y);
        CHECK(std::abs(v) < 1e-9);
    }
    for (double x : boundary_zeros(5, 2, t, Side::YPI)) {
        double v = t.c * std::cos(5 * x) * std::cos(2 * M_PI) +
                   t.s * std::cos(2 * x) * std::cos(5 * M_PI);
        CHECK(std::abs(v) < 1e-9);
    }
}

TEST_CASE("level preconditions") {
    CHECK_THROWS_AS(count_level_solutions(2, 3, 0.5), std::domain_error);
    CHECK_THROWS_AS(count_level_solutions(0, 0, 0.5), std::domain_error);
}
