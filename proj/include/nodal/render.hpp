#pragma once

#include <string>

#include "nodal/theta.hpp"

namespace nodal {

enum class RenderKind { NODAL, FGRAPH, CHESSBOARD, SWEEP_PROFILE };

struct RenderSpec {
    RenderKind kind = RenderKind::NODAL;
    int p = 1;
    int q = 0;
    Theta theta;
    int resolution = 0;   // 0 = pick automatically
    int width = 640;      // svg canvas
    int samples = 16;     // sweep profile extras
};

// byte-deterministic svg (fixed float formatting, no timestamps)
std::string render_svg(const RenderSpec& spec);

// binary pgm (P5), sign raster of the eigenfunction
std::string render_pgm(const RenderSpec& spec);

}  // namespace nodal
