#pragma once

#include <boost/rational.hpp>

namespace nodal {

// exact arithmetic for cut coordinates and cell areas
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace nodal
