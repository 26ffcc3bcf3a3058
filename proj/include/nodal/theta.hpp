#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nodal {

// mixing angles that force exact structural zeros get a symbolic tag so the
// evaluator can use exact coefficient pairs instead of cos/sin of the angle
enum class ThetaTag { GENERIC, ZERO, QUARTER, HALF, THREE_QUARTER };

struct Theta {
    double value = 0.0;  // in [0, pi)
    ThetaTag tag = ThetaTag::GENERIC;
    // coefficient direction (c, s) with the function c*cos(px)cos(qy) +
    // s*cos(qx)cos(py); a positive rescale of (cos t, sin t), chosen exactly
    // for tagged angles: (1,0), (1,1), (0,1), (-1,1)
    double c = 1.0;
    double s = 0.0;
};

// folds v into [0, pi) (the function family has period pi up to sign)
Theta make_theta(double v);
Theta make_theta(ThetaTag tag);

// accepts a plain float, "pi", "pi/4", "3pi/4", "0.5pi" and the like
std::optional<Theta> parse_theta(std::string_view text);

// "0", "pi/4", "pi/2", "3pi/4" for tags, nullptr for GENERIC
const char* theta_tag_name(ThetaTag tag);

}  // namespace nodal
