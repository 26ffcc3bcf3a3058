#pragma once

#include <cstdint>
#include <string>

#include "nodal/theta.hpp"

namespace nodal {

struct SymmetryBound {
    std::string tag;       // "AROT", "SROT" or "AMIR"
    long long m_lo = 0;    // index of the eigenvalue inside the subspace
    long long mu_cap = 0;  // nodal count cap implied by the symmetry
    int divisibility = 1;  // nodal count must be divisible by this
};

// antisymmetric rotation subspace: odd lambda only
SymmetryBound arot_bound(long long lambda);
// symmetric rotation subspace: even lambda only
SymmetryBound srot_bound(long long lambda);
// antisymmetric mirror subspace: every pair (p,q) with p,q both odd,
// i.e. lambda = 2 mod 4 and representable
SymmetryBound amir_bound(long long lambda);

// a nodal count mu on the quarter domain lifts to 4*mu - perimeter penalty
// on the full square; k and l count interior zero hits on the two fold lines
long long doubling_bound(long long mu_half, int k, int l, bool corner);

struct ThetaReduction {
    Theta theta;
    bool fully_reduced = false;  // true iff the orbit closes into [0, pi/4]
    std::string transform;       // "identity", "y-mirror", "swap", "y-mirror+swap"
};

// folds a mixing angle by the symmetries of the family: the swap symmetry
// always, the y-mirror only when p+q is odd
ThetaReduction reduce_theta(int p, int q, const Theta& th);

}  // namespace nodal
