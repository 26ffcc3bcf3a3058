#include "nodal/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/util.hpp"

namespace nodal {

bool pair_in_subspace(const LatticePair& pr, Subspace tag) {
    switch (tag) {
        case Subspace::FULL: return true;
        case Subspace::AROT: return ((pr.p + pr.q) & 1) == 1;
        case Subspace::SROT: return ((pr.p + pr.q) & 1) == 0;
        case Subspace::AMIR: return (pr.p & 1) == 1 && (pr.q & 1) == 1;
    }
    return false;
}

std::vector<EigenvalueEntry> enumerate_spectrum(long long lambda_max, Subspace tag) {
    if (lambda_max < 0) throw std::domain_error("enumerate_spectrum: negative cutoff");
    std::vector<EigenvalueEntry> out;
    int idx = 1;
    for (long long lam = 0; lam <= lambda_max; ++lam) {
        EigenvalueEntry e;
        e.lambda = lam;
        for (long long p = isqrt_ll(lam); p >= 0; --p) {
            long long rest = lam - p * p;
            long long q = isqrt_ll(rest);
            if (q * q != rest) continue;
            LatticePair pr{static_cast<int>(p), static_cast<int>(q)};
            if (pair_in_subspace(pr, tag)) e.pairs.push_back(pr);
        }
        if (e.pairs.empty()) continue;
        e.n_lo = idx;
        e.n_hi = idx + e.multiplicity() - 1;
        idx = e.n_hi + 1;
        out.push_back(std::move(e));
    }
    return out;
}

long long counting_function(double lambda) {
    if (lambda <= 0) return 0;
    long long count = 0;
    for (long long p = 0; static_cast<double>(p) * p < lambda; ++p) {
        double rest = lambda - static_cast<double>(p) * p;
        long long q = isqrt_ll(static_cast<long long>(std::ceil(rest)) + 1);
        while (static_cast<double>(q) * q >= rest) --q;
        count += q + 1;  // q = 0 .. largest with q^2 < rest
    }
    return count;
}

WeylReport weyl_check(long long lambda_max) {
    if (lambda_max < 1) throw std::domain_error("weyl_check: cutoff must be positive");
    std::vector<int> mult(lambda_max + 1, 0);
    for (long long p = 0; p * p <= lambda_max; ++p)
        for (long long q = 0; p * p + q * q <= lambda_max; ++q) ++mult[p * p + q * q];
    WeylReport rep;
    rep.ok = true;
    rep.worst_margin = 1e300;
    long long below = 0;
    for (long long lam = 0; lam <= lambda_max; ++lam) {
        if (lam > 0 && mult[lam] > 0) {
            double margin = static_cast<double>(below) - 0.25 * M_PI * lam;
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_lambda = lam;
            }
            if (!(4.0 * static_cast<double>(below) > M_PI * lam)) rep.ok = false;
        }
        below += mult[lam];
    }
    return rep;
}

int max_p(const EigenvalueEntry& entry) {
    if (entry.pairs.empty()) throw std::domain_error("max_p: empty multiplet");
    return entry.pairs.front().p;  // pairs are ordered by decreasing p
}

std::optional<IndexRange> subspace_index_range(long long lambda, Subspace tag) {
    if (lambda < 0) return std::nullopt;
    long long below = 0, at = 0;
    for (long long p = 0; p * p <= lambda; ++p)
        for (long long q = 0; p * p + q * q <= lambda; ++q) {
            if (!pair_in_subspace({static_cast<int>(p), static_cast<int>(q)}, tag)) continue;
            if (p * p + q * q == lambda) ++at; else ++below;
        }
    if (at == 0) return std::nullopt;
    return IndexRange{static_cast<int>(below + 1), static_cast<int>(below + at)};
}

const char* subspace_name(Subspace tag) {
    switch (tag) {
        case Subspace::FULL: return "full";
        case Subspace::AROT: return "arot";
        case Subspace::SROT: return "srot";
        case Subspace::AMIR: return "amir";
    }
    return "full";
}

}  // namespace nodal
