#pragma once

namespace nodal {

// floor(sqrt(v)) exactly for nonnegative 64-bit integers
inline long long isqrt_ll(long long v) {
    if (v <= 0) return 0;
    long long r = 1;
    while (r * r <= v) r <<= 1;
    long long lo = r >> 1, hi = r;
    while (lo + 1 < hi) {
        long long m = lo + (hi - lo) / 2;
        if (m * m <= v) lo = m; else hi = m;
    }
    return lo;
}

}  // namespace nodal
