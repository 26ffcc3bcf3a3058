#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nodal/spectrum.hpp"

namespace nodal {

enum class Rule {
    DEFINITION_SHARP,
    MULTIPLICITY,
    AROT,
    SROT,
    AMIR,
    P0_FAMILY,
    PP_FAMILY,
    DOUBLING,
    TOUCH_COUNT,
    CHESSBOARD_AREA,
    SPECIAL_CASE_21,
    SPECIAL_CASE_32,
    SPECIAL_CASE_41,
    SPECIAL_CASE_63,
    SPECIAL_CASE_42,
    SPECIAL_CASE_64,
    SPECIAL_CASE_84,
    SPECIAL_CASE_83,
    SPECIAL_CASE_94,
    SPECIAL_CASE_104,
    PLEIJEL_GATE,
    UNDECIDED,
};

enum class Status { COURANT_SHARP, NOT_SHARP, UNDECIDED };

struct Verdict {
    long long n_lo = 0;
    long long n_hi = 0;
    long long lambda = 0;
    std::vector<LatticePair> pairs;
    Status status = Status::UNDECIDED;
    Rule rule = Rule::UNDECIDED;
    double bound_used = 0.0;       // the number that beats n_lo (or equals it)
    bool parity_obstruction = false;
    std::optional<IndexRange> arot;
    std::optional<IndexRange> srot;
    std::optional<IndexRange> amir;
    std::string reference_rule;    // rule named by the published table, if any
};

// full decision for eigenvalue index n (multiplet containing n)
Verdict classify(long long n);

// one verdict per multiplet with n_lo <= n_max
std::vector<Verdict> generate_table(long long n_max = 208);

// the indices n with mu(Psi_n) = n possible, i.e. the five sharp ones
std::set<long long> courant_sharp_set(long long n_max = 208);

// the exclusion rules that apply between the cheap gates and the special
// cases; classify tries them in this order, and any permutation must give
// the same status on every multiplet
enum class MiddleRule { SYM, P0, PP, DOUBLING, TOUCH, CHESSBOARD };
Verdict classify_entry(const EigenvalueEntry& e,
                       const std::array<MiddleRule, 6>& order);

std::string table_csv(const std::vector<Verdict>& table);
std::vector<Verdict> table_from_csv(const std::string& csv);

const char* rule_name(Rule r);
const char* status_name(Status s);

}  // namespace nodal
