#pragma once

#include <vector>

#include "nodal/theta.hpp"

namespace nodal {

int v2(int n);  // exponent of 2 in n; 0 for odd n, large sentinel for n = 0

// cos(px) and cos(qx) share zeros iff p/g and q/g are both odd (g = gcd),
// equivalently v2(p) == v2(q); the shared zeros are those of cos(2^v2 x)
bool common_cosine_zeros(int p, int q);
std::vector<double> common_zero_positions(int p, int q);

// the ratio f(x) = cos(px)/cos(qx) for p > q >= 0, with removable
// singularities filled by exact polynomial division of the cosine
// polynomials; at a true pole returns a signed infinity (sign taken as the
// limit from below)
double f_ratio(int p, int q, double x);
bool f_is_pole(int p, int q, double x);

// roots of p tan(px) = q tan(qx) in (0, pi) -- the critical points of f;
// gcd is divided out internally and roots rescaled back
std::vector<double> solve_tangent_equation(int p, int q);

struct InteriorCritical {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // in [0, pi)
};

// interior stationary points of the two-parameter family: ordered pairs of
// distinct tangent-equation roots with tan(theta) = -f(y)/f(x)
std::vector<InteriorCritical> interior_critical_points(int p, int q);

// mixing angles where a boundary-zero count can change: |f| at each
// tangent-equation root, folded into (0, pi/4]
std::vector<double> boundary_critical_thetas(int p, int q);

// number of solutions of cos(px) = t cos(qx) in [0, pi], exact via
// monotone-piece isolation of f; shared cosine zeros solve for every t
int count_level_solutions(int p, int q, double t);

// the solutions themselves, ascending, refined to 1e-12
std::vector<double> level_solutions(int p, int q, double t);

enum class Side { X0, XPI, Y0, YPI };

// zeros of the family restricted to one boundary side, as coordinates along
// the side in (0, pi); reduces to a level problem for f
std::vector<double> boundary_zeros(int p, int q, const Theta& th, Side side);

const char* side_name(Side s);

}  // namespace nodal
