#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nodal/chebyshev.hpp"

using namespace nodal;

TEST_CASE("low-degree coefficient vectors") {
    CHECK(chebyshev_t(0) == Poly{1});
    CHECK(chebyshev_t(1) == Poly{0, 1});
    CHECK(chebyshev_t(2) == Poly{-1, 0, 2});
    CHECK(chebyshev_t(3) == Poly{0, -3, 0, 4});
    CHECK(chebyshev_t(4) == Poly{1, 0, -8, 0, 8});
}

TEST_CASE("cosine composition identity") {
    for (int n = 0; n <= 12; ++n) {
        Poly t = chebyshev_t(n);
        for (double x : {0.1, 0.7, 1.3, 2.9}) {
            double lhs = eval_poly(t, std::cos(x));
            CHECK(std::abs(lhs - std::cos(n * x)) < 1e-10);
        }
    }
}

TEST_CASE("degree limits") {
    CHECK(chebyshev_t(44).size() == 45);
    CHECK_THROWS_AS(chebyshev_t(45), std::domain_error);
    CHECK_THROWS_AS(chebyshev_t(-1), std::domain_error);
}

TEST_CASE("exact division when the zero sets nest") {
    Poly t6 = chebyshev_t(6), t2 = chebyshev_t(2);
    Poly quot = poly_divide_exact(t6, t2);
    for (double x : {0.2, 0.55, 0.9}) {
        CHECK(std::abs(eval_poly(quot, x) * eval_poly(t2, x) - eval_poly(t6, x)) < 1e-9);
    }

    Poly t12 = chebyshev_t(12), t4 = chebyshev_t(4);
    Poly q2 = poly_divide_exact(t12, t4);
    CHECK(q2.size() == 9);

    CHECK_THROWS_AS(poly_divide_exact(chebyshev_t(3), chebyshev_t(2)), std::invalid_argument);
}
