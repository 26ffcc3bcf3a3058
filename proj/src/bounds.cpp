#include "nodal/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/util.hpp"

namespace nodal {

double bessel_j0(double x) {
    double x2 = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 120; ++k) {
        term *= -x2 / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return sum;
}

double bessel_j01() {
    // the series is sign-definite around the first zero, bracketed by [2, 3]
    static const double z = [] {
        double lo = 2.0, hi = 3.0;
        for (;;) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;  // bracket shrunk to one ulp
            if (bessel_j0(mid) > 0.0) lo = mid;
            else hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return z;
}

double bessel_j01_sq() {
    static const double z2 = bessel_j01() * bessel_j01();
    return z2;
}

double faber_krahn_min_area(double lambda) {
    if (lambda <= 0) throw std::domain_error("faber_krahn_min_area: eigenvalue must be positive");
    return M_PI * bessel_j01_sq() / lambda;
}

double mu_upper_inner_area(long long lambda, const Rational& inner_fraction) {
    if (lambda < 0) throw std::domain_error("mu_upper_inner_area: negative eigenvalue");
    if (inner_fraction <= Rational(0) || inner_fraction > Rational(1))
        throw std::domain_error("mu_upper_inner_area: fraction must lie in (0, 1]");
    return to_double(inner_fraction) * M_PI * static_cast<double>(lambda) / bessel_j01_sq() +
           4.0 * static_cast<double>(isqrt_ll(lambda));
}

double mu_upper_touch_count(long long lambda, int P) {
    if (lambda < 0 || P < 0) throw std::domain_error("mu_upper_touch_count: negative argument");
    return M_PI * static_cast<double>(lambda) / bessel_j01_sq() +
           std::max(4.0 * P, 1.0);
}

double pleijel_rhs(double n) {
    if (n < 1) throw std::domain_error("pleijel_rhs: index must be >= 1");
    return 4.0 / bessel_j01_sq() * (n - 1.0) + 8.0 / std::sqrt(M_PI) * std::sqrt(n - 1.0);
}

bool pleijel_gate(long long n) {
    if (n < 1) throw std::domain_error("pleijel_gate: index must be >= 1");
    return static_cast<double>(n) <= pleijel_rhs(static_cast<double>(n));
}

double pleijel_flip_point() {
    // rhs(n) - n changes sign exactly once between 208 and 209
    double lo = 208.0, hi = 209.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (pleijel_rhs(mid) - mid > 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

BoundReport inner_area_report(long long n, long long lambda, const Rational& frac) {
    BoundReport r;
    r.n = n;
    r.lambda = lambda;
    r.bound_value = mu_upper_inner_area(lambda, frac);
    r.kind = BoundKind::INNER_AREA;
    r.excludes_courant_sharp = r.bound_value < static_cast<double>(n);
    r.area_fraction = frac;
    return r;
}

BoundReport touch_count_report(long long n, long long lambda, int P) {
    BoundReport r;
    r.n = n;
    r.lambda = lambda;
    r.bound_value = mu_upper_touch_count(lambda, P);
    r.kind = BoundKind::TOUCH_COUNT;
    r.excludes_courant_sharp = r.bound_value < static_cast<double>(n);
    r.area_fraction = Rational(1);
    return r;
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::PLEIJEL_GATE: return "PLEIJEL_GATE";
        case BoundKind::INNER_AREA: return "INNER_AREA";
        case BoundKind::TOUCH_COUNT: return "TOUCH_COUNT";
    }
    return "TOUCH_COUNT";
}

}  // namespace nodal
