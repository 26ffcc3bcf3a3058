#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "nodal/render.hpp"

using namespace nodal;

TEST_CASE("nodal picture is deterministic svg") {
    RenderSpec spec;
    spec.kind = RenderKind::NODAL;
    spec.p = 2;
    spec.q = 1;
    spec.theta = make_theta(M_PI / 8);
    spec.resolution = 128;
    std::string a = render_svg(spec);
    std::string b = render_svg(spec);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.rfind("</svg>") != std::string::npos);
    CHECK(a.find("<path") != std::string::npos);
}

TEST_CASE("function graph marks poles and critical roots") {
    RenderSpec spec;
    spec.kind = RenderKind::FGRAPH;
    spec.p = 2;
    spec.q = 1;
    std::string svg = render_svg(spec);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // pole at pi/2
    CHECK(svg == render_svg(spec));

    spec.p = 4;
    spec.q = 1;
    std::string svg41 = render_svg(spec);
    CHECK(svg41.find("circle") != std::string::npos);  // two tangent roots
}

TEST_CASE("chessboard render delegates to the board svg") {
    RenderSpec spec;
    spec.kind = RenderKind::CHESSBOARD;
    spec.p = 9;
    spec.q = 4;
    std::string svg = render_svg(spec);
    CHECK(svg.find("#cc2222") != std::string::npos);
    CHECK(svg == render_svg(spec));
}

TEST_CASE("sweep profile plot") {
    RenderSpec spec;
    spec.kind = RenderKind::SWEEP_PROFILE;
    spec.p = 4;
    spec.q = 1;
    spec.samples = 6;
    std::string svg = render_svg(spec);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);  // critical markers
    CHECK(svg == render_svg(spec));
}

TEST_CASE("pgm raster has the right shape") {
    RenderSpec spec;
    spec.kind = RenderKind::NODAL;
    spec.p = 2;
    spec.q = 1;
    spec.theta = make_theta(0.3);
    spec.resolution = 64;
    std::string pgm = render_pgm(spec);
    std::string header = "P5\n64 64\n255\n";
    CHECK(pgm.size() == header.size() + 64 * 64);
    CHECK(pgm.compare(0, header.size(), header) == 0);
    CHECK(pgm == render_pgm(spec));

    spec.kind = RenderKind::FGRAPH;
    CHECK_THROWS_AS(render_pgm(spec), std::invalid_argument);
}
