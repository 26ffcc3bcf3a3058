#include <doctest.h>

#include <cmath>
#include <string>

#include "nodal/spectrum.hpp"

using namespace nodal;

TEST_CASE("counting function landmarks") {
    CHECK(counting_function(1) == 1);
    CHECK(counting_function(5) == 6);
    CHECK(counting_function(245) == 208);
    CHECK(counting_function(0.5) == 1);
    CHECK(counting_function(0) == 0);
}

TEST_CASE("spectrum enumeration gives contiguous index ranges") {
    auto es = enumerate_spectrum(245);
    REQUIRE(!es.empty());
    CHECK(es.front().lambda == 0);
    CHECK(es.front().n_lo == 1);
    CHECK(es.front().n_hi == 1);
    int next = 1;
    for (const auto& e : es) {
        CHECK(e.n_lo == next);
        CHECK(e.n_hi == e.n_lo + e.multiplicity() - 1);
        next = e.n_hi + 1;
        for (size_t i = 0; i + 1 < e.pairs.size(); ++i)
            CHECK(e.pairs[i].p > e.pairs[i + 1].p);  // pairs by decreasing p
        for (const auto& pr : e.pairs) CHECK(pr.value() == e.lambda);
    }
    // tiling covers 1..N(245)+mult(245): 208 strictly below plus (14,7),(7,14) at 245
    CHECK(next == 211);
    CHECK(es.back().lambda == 245);
    CHECK(es.back().multiplicity() == 2);
}

TEST_CASE("low eigenvalues and their pairs") {
    auto es = enumerate_spectrum(245);
    auto at = [&](long long lam) -> const EigenvalueEntry& {
        for (const auto& e : es)
            if (e.lambda == lam) return e;
        REQUIRE(false);
        return es.front();
    };
    CHECK(at(1).n_lo == 2);
    CHECK(at(1).n_hi == 3);
    CHECK(at(2).n_lo == 4);
    CHECK(at(4).n_hi == 6);
    CHECK(at(5).n_lo == 7);
    CHECK(at(8).n_lo == 9);
    CHECK(at(8).n_hi == 9);

    const auto& e25 = at(25);
    CHECK(e25.n_lo == 23);
    CHECK(e25.n_hi == 26);
    REQUIRE(e25.multiplicity() == 4);
    CHECK(e25.pairs[0] == LatticePair{5, 0});
    CHECK(e25.pairs[1] == LatticePair{4, 3});
    CHECK(e25.pairs[2] == LatticePair{3, 4});
    CHECK(e25.pairs[3] == LatticePair{0, 5});
    CHECK(max_p(e25) == 5);

    CHECK(at(45).n_lo == 42);
    CHECK(at(72).n_lo == 65);
    CHECK(at(72).n_hi == 65);  // (6,6) alone
    CHECK(at(130).n_lo == 114);
    CHECK(at(130).n_hi == 117);
    CHECK(at(244).n_hi == 208);
}

TEST_CASE("weyl check margins") {
    WeylReport small = weyl_check(245);
    CHECK(small.ok);
    CHECK(std::abs(small.worst_margin - 0.214602) < 1e-4);
    CHECK(small.worst_lambda == 1);

    WeylReport big = weyl_check(10000);
    CHECK(big.ok);
    CHECK(big.worst_lambda == 1);
    CHECK(big.worst_margin > 0.2);
}

TEST_CASE("subspace membership") {
    CHECK(pair_in_subspace({2, 1}, Subspace::AROT));
    CHECK(!pair_in_subspace({2, 1}, Subspace::SROT));
    CHECK(pair_in_subspace({3, 1}, Subspace::SROT));
    CHECK(pair_in_subspace({3, 1}, Subspace::AMIR));
    CHECK(!pair_in_subspace({3, 2}, Subspace::AMIR));
    CHECK(pair_in_subspace({0, 0}, Subspace::SROT));
}

TEST_CASE("subspace index ranges") {
    auto r = subspace_index_range(1, Subspace::AROT);
    REQUIRE(r.has_value());
    CHECK(*r == IndexRange{1, 2});

    r = subspace_index_range(0, Subspace::SROT);
    REQUIRE(r.has_value());
    CHECK(*r == IndexRange{1, 1});

    r = subspace_index_range(2, Subspace::AMIR);
    REQUIRE(r.has_value());
    CHECK(*r == IndexRange{1, 1});

    r = subspace_index_range(25, Subspace::AROT);
    REQUIRE(r.has_value());
    CHECK(*r == IndexRange{11, 14});

    CHECK(!subspace_index_range(2, Subspace::AROT).has_value());
    CHECK(!subspace_index_range(1, Subspace::SROT).has_value());
    CHECK(!subspace_index_range(4, Subspace::AMIR).has_value());
}

TEST_CASE("subspace names") {
    CHECK(std::string(subspace_name(Subspace::AROT)) == "arot");
    CHECK(std::string(subspace_name(Subspace::FULL)) == "full");
}
