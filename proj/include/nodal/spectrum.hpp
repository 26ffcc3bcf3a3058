#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nodal {

// one lattice point (p,q); its eigenvalue is p^2 + q^2
struct LatticePair {
    int p = 0;
    int q = 0;
    long long value() const { return 1LL * p * p + 1LL * q * q; }
    bool operator==(const LatticePair&) const = default;
};

// invariant subspaces of the square's point symmetries:
//   AROT  antisymmetric under (x,y) -> (pi-x, pi-y), pairs with p+q odd
//   SROT  symmetric under the same map, pairs with p+q even
//   AMIR  antisymmetric under both mirrors, pairs with p and q both odd
enum class Subspace { FULL, AROT, SROT, AMIR };

struct EigenvalueEntry {
    long long lambda = 0;
    std::vector<LatticePair> pairs;  // ordered by decreasing p
    int n_lo = 0;                    // 1-based index range in the sequence
    int n_hi = 0;
    int multiplicity() const { return static_cast<int>(pairs.size()); }
};

struct IndexRange {
    int lo = 0;
    int hi = 0;
    bool operator==(const IndexRange&) const = default;
};

bool pair_in_subspace(const LatticePair& pr, Subspace tag);

// every distinct eigenvalue <= lambda_max of the tagged subspace, with
// pairs restricted by the tag and cumulative 1-based index ranges
std::vector<EigenvalueEntry> enumerate_spectrum(long long lambda_max,
                                                Subspace tag = Subspace::FULL);

// eigenvalues strictly below lambda, counted with multiplicity
long long counting_function(double lambda);

struct WeylReport {
    bool ok = false;
    double worst_margin = 0.0;  // min over eigenvalues of N(lambda) - (pi/4) lambda
    long long worst_lambda = 0;
};

// checks N(lambda) > (pi/4) lambda at every eigenvalue in (0, lambda_max]
WeylReport weyl_check(long long lambda_max);

int max_p(const EigenvalueEntry& entry);

// 1-based index range of lambda within the tagged subspace sequence
std::optional<IndexRange> subspace_index_range(long long lambda, Subspace tag);

const char* subspace_name(Subspace tag);

}  // namespace nodal
