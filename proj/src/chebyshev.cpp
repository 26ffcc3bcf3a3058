#include "nodal/chebyshev.hpp"

#include <stdexcept>
#include <utility>

namespace nodal {

Poly chebyshev_t(int n) {
    if (n < 0 || n > 44) throw std::domain_error("chebyshev_t: degree outside int64-safe range");
    Poly a{1};
    if (n == 0) return a;
    Poly b{0, 1};
    for (int k = 2; k <= n; ++k) {
        Poly c(k + 1, 0);
        for (size_t i = 0; i < b.size(); ++i) c[i + 1] = 2 * b[i];
        for (size_t i = 0; i < a.size(); ++i) c[i] -= a[i];
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

double eval_poly(const Poly& c, double u) {
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * u + static_cast<double>(c[i]);
    return acc;
}

Poly poly_divide_exact(const Poly& num, const Poly& den) {
    if (den.empty() || den.back() == 0) throw std::invalid_argument("poly_divide_exact: bad divisor");
    if (num.size() < den.size()) throw std::invalid_argument("poly_divide_exact: degree underflow");
    Poly rem = num;
    Poly quot(num.size() - den.size() + 1, 0);
    long long lead = den.back();
    for (size_t k = quot.size(); k-- > 0;) {
        long long c = rem[den.size() - 1 + k];
        if (c % lead != 0) throw std::invalid_argument("poly_divide_exact: inexact quotient");
        long long qk = c / lead;
        quot[k] = qk;
        for (size_t i = 0; i < den.size(); ++i) rem[i + k] -= qk * den[i];
    }
    for (long long c : rem)
        if (c != 0) throw std::invalid_argument("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace nodal
