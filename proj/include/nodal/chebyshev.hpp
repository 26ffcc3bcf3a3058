#pragma once

#include <vector>

namespace nodal {

// polynomial in monomial basis, coeffs[k] multiplies u^k; exact integers
using Poly = std::vector<long long>;

// T_n with cos(n x) = T_n(cos x); n <= 44 keeps coefficients inside int64
Poly chebyshev_t(int n);

double eval_poly(const Poly& c, double u);

// exact division over the integers; throws std::invalid_argument if the
// remainder is nonzero or a coefficient quotient is not integral
Poly poly_divide_exact(const Poly& num, const Poly& den);

}  // namespace nodal
