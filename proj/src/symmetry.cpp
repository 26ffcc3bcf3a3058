#include "nodal/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/spectrum.hpp"

namespace nodal {

SymmetryBound arot_bound(long long lambda) {
    if (lambda <= 0 || lambda % 2 == 0)
        throw std::domain_error("arot_bound: eigenvalue must be positive and odd");
    auto r = subspace_index_range(lambda, Subspace::AROT);
    if (!r) throw std::domain_error("arot_bound: eigenvalue has no lattice representation");
    return {"AROT", r->lo, 2LL * r->lo, 2};
}

SymmetryBound srot_bound(long long lambda) {
    if (lambda < 0 || lambda % 2 == 1)
        throw std::domain_error("srot_bound: eigenvalue must be nonnegative and even");
    auto r = subspace_index_range(lambda, Subspace::SROT);
    if (!r) throw std::domain_error("srot_bound: eigenvalue has no lattice representation");
    return {"SROT", r->lo, 2LL * r->lo, 1};
}

SymmetryBound amir_bound(long long lambda) {
    if (lambda % 4 != 2)
        throw std::domain_error("amir_bound: eigenvalue must be 2 mod 4");
    auto r = subspace_index_range(lambda, Subspace::AMIR);
    if (!r) throw std::domain_error("amir_bound: eigenvalue has no odd-odd representation");
    return {"AMIR", r->lo, 4LL * r->lo, 4};
}

long long doubling_bound(long long mu_half, int k, int l, bool corner) {
    if (mu_half < 1 || k < 0 || l < 0) throw std::domain_error("doubling_bound: bad arguments");
    long long r = 4 * mu_half - (2LL * (k + l) + 3) - (corner ? 1 : 0);
    if (r < 1) throw std::domain_error("doubling_bound: penalty exceeds the doubled count");
    return r;
}

ThetaReduction reduce_theta(int p, int q, const Theta& th) {
    double t = th.value;
    bool odd = ((p + q) & 1) == 1;
    bool mirrored = false, swapped = false;
    if (odd) {
        if (t > M_PI / 2 + 1e-15) {
            t = M_PI - t;
            mirrored = true;
        }
        if (t > M_PI / 4 + 1e-15 && t <= M_PI / 2 + 1e-15) {
            t = M_PI / 2 - t;
            swapped = true;
        }
    } else {
        if (t > M_PI / 4 + 1e-15 && t <= M_PI / 2 + 1e-15) {
            t = M_PI / 2 - t;
            swapped = true;
        } else if (t > 3 * M_PI / 4 + 1e-15) {
            t = 3 * M_PI / 2 - t;
            swapped = true;
        }
    }
    ThetaReduction r;
    r.theta = make_theta(t);
    r.fully_reduced = odd;
    r.transform = mirrored && swapped ? "y-mirror+swap"
                : mirrored            ? "y-mirror"
                : swapped             ? "swap"
                                      : "identity";
    return r;
}

}  // namespace nodal
