#include <doctest.h>

#include <cmath>

#include "nodal/theta.hpp"

using namespace nodal;

TEST_CASE("tag detection at the structural angles") {
    Theta z = make_theta(0.0);
    CHECK(z.tag == ThetaTag::ZERO);
    CHECK(z.c == 1.0);
    CHECK(z.s == 0.0);

    Theta q = make_theta(M_PI / 4);
    CHECK(q.tag == ThetaTag::QUARTER);
    CHECK(q.c == 1.0);
    CHECK(q.s == 1.0);

    Theta h = make_theta(M_PI / 2);
    CHECK(h.tag == ThetaTag::HALF);
    CHECK(h.c == 0.0);
    CHECK(h.s == 1.0);

    Theta t = make_theta(3 * M_PI / 4);
    CHECK(t.tag == ThetaTag::THREE_QUARTER);
    CHECK(t.c == -1.0);
    CHECK(t.s == 1.0);

    Theta g = make_theta(0.3);
    CHECK(g.tag == ThetaTag::GENERIC);
    CHECK(std::abs(g.c - std::cos(0.3)) < 1e-15);
    CHECK(std::abs(g.s - std::sin(0.3)) < 1e-15);
}

TEST_CASE("angles fold into one period") {
    CHECK(std::abs(make_theta(M_PI + 0.3).value - 0.3) < 1e-12);
    CHECK(make_theta(M_PI).tag == ThetaTag::ZERO);
    CHECK(make_theta(-M_PI / 4).tag == ThetaTag::THREE_QUARTER);
    CHECK(std::abs(make_theta(-M_PI / 4).value - 3 * M_PI / 4) < 1e-12);
    CHECK(make_theta(5 * M_PI / 4).tag == ThetaTag::QUARTER);
}

TEST_CASE("tag constructor") {
    CHECK(make_theta(ThetaTag::HALF).value == doctest::Approx(M_PI / 2));
    CHECK(make_theta(ThetaTag::ZERO).value == 0.0);
}

TEST_CASE("symbolic parsing") {
    auto t = parse_theta("pi/4");
    REQUIRE(t.has_value());
    CHECK(t->tag == ThetaTag::QUARTER);

    t = parse_theta("3pi/4");
    REQUIRE(t.has_value());
    CHECK(t->tag == ThetaTag::THREE_QUARTER);

    t = parse_theta("0.5pi");
    REQUIRE(t.has_value());
    CHECK(t->tag == ThetaTag::HALF);

    t = parse_theta("pi");
    REQUIRE(t.has_value());
    CHECK(t->tag == ThetaTag::ZERO);

    t = parse_theta("0.3");
    REQUIRE(t.has_value());
    CHECK(t->tag == ThetaTag::GENERIC);
    CHECK(std::abs(t->value - 0.3) < 1e-15);

    CHECK(!parse_theta("elephant").has_value());
    CHECK(!parse_theta("").has_value());
}

TEST_CASE("tag names") {
    CHECK(std::string(theta_tag_name(ThetaTag::QUARTER)) == "pi/4");
    CHECK(theta_tag_name(ThetaTag::GENERIC) == nullptr);
}
