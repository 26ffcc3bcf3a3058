#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nodal/classify.hpp"
#include "nodal/serialize.hpp"

using namespace nodal;

namespace {

struct Expected {
    long long n_lo, n_hi, lambda;
    int p, q;
    std::string status, rule;
    double bound;
    bool parity;
};

std::vector<Expected> load_expected() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/expected_verdicts.csv");
    REQUIRE(in.good());
    std::vector<Expected> out;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string f;
        std::vector<std::string> fs;
        while (std::getline(ls, f, ',')) fs.push_back(f);
        REQUIRE(fs.size() == 9);
        out.push_back({std::stoll(fs[0]), std::stoll(fs[1]), std::stoll(fs[2]),
                       std::stoi(fs[3]), std::stoi(fs[4]), fs[5], fs[6], std::stod(fs[7]),
                       fs[8] == "1"});
    }
    return out;
}

}  // namespace

TEST_CASE("full table against the frozen verdicts") {
    auto expected = load_expected();
    auto table = generate_table(208);
    REQUIRE(table.size() == expected.size());
    for (size_t i = 0; i < table.size(); ++i) {
        const Verdict& v = table[i];
        const Expected& e = expected[i];
        CAPTURE(e.lambda);
        CHECK(v.n_lo == e.n_lo);
        CHECK(v.n_hi == e.n_hi);
        CHECK(v.lambda == e.lambda);
        REQUIRE(!v.pairs.empty());
        CHECK(v.pairs[0].p == e.p);
        CHECK(v.pairs[0].q == e.q);
        CHECK(std::string(status_name(v.status)) == e.status);
        CHECK(std::string(rule_name(v.rule)) == e.rule);
        CHECK(std::abs(v.bound_used - e.bound) < 1e-3);
        CHECK(v.parity_obstruction == e.parity);
    }
}

TEST_CASE("rule census") {
    std::map<Rule, int> census;
    for (const auto& v : generate_table(208)) ++census[v.rule];
    CHECK(census[Rule::DEFINITION_SHARP] == 5);
    CHECK(census[Rule::AROT] == 27);
    CHECK(census[Rule::SROT] == 20);
    CHECK(census[Rule::AMIR] == 12);
    CHECK(census[Rule::P0_FAMILY] == 6);
    CHECK(census[Rule::PP_FAMILY] == 1);
    CHECK(census[Rule::DOUBLING] == 3);
    CHECK(census[Rule::TOUCH_COUNT] == 11);
    CHECK(census[Rule::CHESSBOARD_AREA] == 6);
    CHECK(census[Rule::SPECIAL_CASE_32] == 1);
    CHECK(census[Rule::SPECIAL_CASE_41] == 1);
    CHECK(census[Rule::SPECIAL_CASE_42] == 1);
    CHECK(census[Rule::SPECIAL_CASE_64] == 1);
    CHECK(census[Rule::UNDECIDED] == 0);
    int total = 0;
    for (const auto& [r, c] : census) total += c;
    CHECK(total == 95);
}

TEST_CASE("single-index queries") {
    CHECK(classify(1).status == Status::COURANT_SHARP);
    CHECK(classify(9).status == Status::COURANT_SHARP);

    Verdict v3 = classify(3);  // second index of a multiplet never qualifies
    CHECK(v3.status == Status::NOT_SHARP);
    CHECK(v3.rule == Rule::MULTIPLICITY);
    CHECK(v3.bound_used == 2.0);

    Verdict v18 = classify(18);
    CHECK(v18.rule == Rule::SPECIAL_CASE_41);
    CHECK(v18.bound_used == 10.0);

    Verdict v101 = classify(101);
    CHECK(v101.rule == Rule::CHESSBOARD_AREA);
    CHECK(std::abs(v101.bound_used - 89.78147903586924) < 1e-6);

    Verdict v209 = classify(209);
    CHECK(v209.rule == Rule::PLEIJEL_GATE);
    CHECK(v209.status == Status::NOT_SHARP);
    CHECK(classify(250).rule == Rule::PLEIJEL_GATE);

    CHECK(classify(7).rule == Rule::AROT);
    CHECK_THROWS_AS(classify(0), std::domain_error);
}

TEST_CASE("sharp set") {
    auto s = courant_sharp_set(208);
    CHECK(s == std::set<long long>{1, 2, 4, 5, 9});
}

TEST_CASE("status is invariant under rule permutations") {
    auto spectrum = enumerate_spectrum(245);
    auto baseline = generate_table(208);
    std::array<MiddleRule, 6> order{MiddleRule::SYM,      MiddleRule::P0,
                                    MiddleRule::PP,       MiddleRule::DOUBLING,
                                    MiddleRule::TOUCH,    MiddleRule::CHESSBOARD};
    std::sort(order.begin(), order.end());
    int perms = 0;
    do {
        ++perms;
        size_t i = 0;
        for (const auto& e : spectrum) {
            if (e.n_lo > 208) break;
            Verdict v = classify_entry(e, order);
            REQUIRE(i < baseline.size());
            CHECK(v.status == baseline[i].status);
            ++i;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(perms == 720);
}

TEST_CASE("published rule remarks ride along") {
    auto table = generate_table(208);
    int with_remark = 0;
    for (const auto& v : table)
        if (!v.reference_rule.empty()) ++with_remark;
    CHECK(with_remark == 95);
}

TEST_CASE("csv round trip is lossless") {
    auto table = generate_table(208);
    std::string csv = table_csv(table);
    auto back = table_from_csv(csv);
    CHECK(table_csv(back) == csv);
}

TEST_CASE("json round trip matches the csv") {
    auto table = generate_table(208);
    std::string csv = table_csv(table);
    auto back = table_from_json(to_json(table));
    CHECK(table_csv(back) == csv);
}
