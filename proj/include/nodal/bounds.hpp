#pragma once

#include "nodal/rational.hpp"

namespace nodal {

// Bessel J0 by its power series; adequate for |x| <= 16
double bessel_j0(double x);

// first positive zero of J0, to full double precision
double bessel_j01();
double bessel_j01_sq();

// minimal possible area of a nodal domain not touching the boundary:
// pi * j01^2 / lambda; throws std::domain_error for lambda <= 0
double faber_krahn_min_area(double lambda);

// count cap from a capped interior area plus the generic boundary-strip cap:
//   inner_fraction * pi * lambda / j01^2 + 4 * floor(sqrt(lambda))
// inner_fraction is the interior-area share of the square, in (0, 1]
double mu_upper_inner_area(long long lambda, const Rational& inner_fraction);

// count cap from full-square area plus the boundary touching-point cap:
//   pi * lambda / j01^2 + max(4P, 1), P the largest p over the pairs
double mu_upper_touch_count(long long lambda, int P);

// index gate: n <= 4/j01^2 (n-1) + 8/sqrt(pi) sqrt(n-1);
// false from n = 209 on, closing the classification
double pleijel_rhs(double n);
bool pleijel_gate(long long n);

// unique crossing of n = pleijel_rhs(n) between 208 and 209
double pleijel_flip_point();

enum class BoundKind { PLEIJEL_GATE, INNER_AREA, TOUCH_COUNT };

struct BoundReport {
    long long n = 0;
    long long lambda = 0;
    double bound_value = 0.0;
    BoundKind kind = BoundKind::TOUCH_COUNT;
    bool excludes_courant_sharp = false;
    Rational area_fraction{1, 1};  // meaningful for INNER_AREA only
};

BoundReport inner_area_report(long long n, long long lambda, const Rational& frac);
BoundReport touch_count_report(long long n, long long lambda, int P);

const char* bound_kind_name(BoundKind k);

}  // namespace nodal
