#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nodal/levels.hpp"
#include "nodal/theta.hpp"

namespace nodal {

// eigenfunction of the family: cos(t)cos(px)cos(qy) + sin(t)cos(qx)cos(py);
// tagged angles use exact coefficient pairs so sign tests are exact
double eval_phi(int p, int q, const Theta& th, double x, double y);

struct NodalReport {
    int p = 0;
    int q = 0;
    Theta theta;
    int count = 0;
    int resolution = 0;  // grid used for the certified count
    bool certified = false;
    // open-segment zero counts on the four sides, order x=0, x=pi, y=0, y=pi
    std::array<int, 4> boundary_touches{0, 0, 0, 0};
    // corners (0,0), (pi,0), (0,pi), (pi,pi)
    std::array<bool, 4> corner_hits{false, false, false, false};
    std::vector<InteriorCritical> interior_criticals;
};

// grid sized to put cell centers and edge samples off the zero set of every
// cosine factor involved
int base_resolution(int p, int q);

// raw connected-component count on an res x res grid of cell centers with
// 9-point shared-edge confirmation between neighbours
int grid_count(int p, int q, const Theta& th, int res);

// certified nodal-domain count: doubles the grid until two consecutive
// resolutions agree (at most 4 doublings), then fills in boundary data
NodalReport count_nodal_domains(int p, int q, const Theta& th, int resolution = 0);

// counts for the separable corner cases of the family
int product_count(int p, int q);              // theta tag ZERO: (p+1)(q+1)
int p0_max_count(int p);                      // max over theta for the (p,0) pair
int touching_lower_bound(int p, int q);       // boundary touches force >= 2(p+q)
int mu_lower(int p, int q);                   // generic lower bound p+q+1

struct SweepPoint {
    Theta theta;
    int count = 0;
    bool certified = false;
    bool at_critical = false;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    std::vector<double> critical_thetas;  // skeleton angles actually used
    int max_count = 0;
    double argmax_theta = 0.0;
};

// sweeps the mixing angle over the reduced interval ([0, pi/4] when p+q is
// odd, [0, pi) otherwise), sampling every critical angle, every midpoint
// between consecutive criticals, and `samples` extra uniform points
SweepResult sweep_theta(int p, int q, int samples = 16);

}  // namespace nodal
