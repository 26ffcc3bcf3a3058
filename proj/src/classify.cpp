#include "nodal/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nodal/bounds.hpp"
#include "nodal/chessboard.hpp"
#include "nodal/levels.hpp"
#include "nodal/nodal.hpp"
#include "nodal/symmetry.hpp"
#include "nodal/util.hpp"

namespace nodal {

namespace {

const std::array<MiddleRule, 6> kDefaultOrder{MiddleRule::SYM,      MiddleRule::P0,
                                              MiddleRule::PP,       MiddleRule::DOUBLING,
                                              MiddleRule::TOUCH,    MiddleRule::CHESSBOARD};

bool is_sharp_index(long long n) {
    return n == 1 || n == 2 || n == 4 || n == 5 || n == 9;
}

// rule the published classification table cites for each eigenvalue
std::string published_rule(long long lambda) {
    static const std::map<long long, const char*> table{
        {0, "sharp"},      {1, "sharp"},     {2, "sharp"},    {4, "sharp"},    {5, "arot"},
        {8, "sharp"},      {9, "p0"},        {10, "amir"},    {13, "sweep32"}, {16, "p0"},
        {17, "sweep41"},   {18, "pp"},       {20, "sweep42"}, {25, "arot"},    {26, "amir"},
        {29, "arot"},      {32, "pp"},       {34, "amir"},    {36, "p0"},      {37, "arot"},
        {40, "doubling"},  {41, "arot"},     {45, "sweep63"}, {49, "p0"},      {50, "amir"},
        {52, "sweep64"},   {53, "arot"},     {58, "amir"},    {61, "arot"},    {64, "p0"},
        {65, "arot"},      {68, "srot"},     {72, "pp"},      {73, "area"},    {74, "amir"},
        {80, "sweep84"},   {81, "p0"},       {82, "amir"},    {85, "arot"},    {89, "touch"},
        {90, "amir"},      {97, "area"},     {98, "amir"},    {100, "srot"},   {101, "arot"},
        {104, "doubling"}, {106, "touch"},   {109, "arot"},   {113, "touch"},  {116, "area"},
        {117, "touch"},    {121, "p0"},      {122, "amir"},   {125, "arot"},   {128, "touch"},
        {130, "amir"},     {136, "touch"},   {137, "touch"},  {144, "p0"},     {145, "arot"},
        {146, "touch"},    {148, "touch"},   {149, "touch"},  {153, "touch"},  {157, "touch"},
        {160, "touch"},    {162, "touch"},   {164, "touch"},  {169, "arot"},   {170, "amir"},
        {173, "touch"},    {178, "touch"},   {180, "touch"},  {181, "touch"},  {185, "arot"},
        {193, "touch"},    {194, "touch"},   {196, "p0"},     {197, "touch"},  {200, "touch"},
        {202, "touch"},    {205, "touch"},   {208, "touch"},  {212, "touch"},  {218, "touch"},
        {221, "touch"},    {225, "touch"},   {226, "touch"},  {229, "touch"},  {232, "touch"},
        {233, "touch"},    {234, "touch"},   {241, "touch"},  {242, "touch"},  {244, "touch"},
    };
    auto it = table.find(lambda);
    return it == table.end() ? std::string() : std::string(it->second);
}

void decide(Verdict& v, Rule rule, double bound, bool parity = false) {
    v.status = Status::NOT_SHARP;
    v.rule = rule;
    v.bound_used = bound;
    v.parity_obstruction = parity;
}

bool rule_sym(const EigenvalueEntry& e, Verdict& v) {
    long long n = e.n_lo;
    if (e.lambda % 2 == 1) {
        long long cap = 2LL * v.arot->lo;
        if (cap < n) {
            decide(v, Rule::AROT, static_cast<double>(cap));
            return true;
        }
        if (n % 2 == 1) {
            // rotation-antisymmetric counts are even, an odd target is out
            decide(v, Rule::AROT, static_cast<double>(cap), true);
            return true;
        }
        return false;
    }
    long long cap = 2LL * v.srot->lo;
    if (cap < n) {
        decide(v, Rule::SROT, static_cast<double>(cap));
        return true;
    }
    if (e.lambda % 4 == 2) {
        long long cap4 = 4LL * v.amir->lo;
        if (cap4 < n) {
            decide(v, Rule::AMIR, static_cast<double>(cap4));
            return true;
        }
        if (n % 4 != 0) {
            decide(v, Rule::AMIR, static_cast<double>(cap4), true);
            return true;
        }
    }
    return false;
}

bool rule_p0(const EigenvalueEntry& e, Verdict& v) {
    if (e.pairs.size() != 2 || e.pairs[0].q != 0) return false;
    long long bound = p0_max_count(e.pairs[0].p);
    if (bound < e.n_lo) {
        decide(v, Rule::P0_FAMILY, static_cast<double>(bound));
        return true;
    }
    return false;
}

bool rule_pp(const EigenvalueEntry& e, Verdict& v) {
    if (e.pairs.size() != 1 || e.pairs[0].p != e.pairs[0].q || e.pairs[0].p < 1) return false;
    long long bound = 1LL * (e.pairs[0].p + 1) * (e.pairs[0].p + 1);
    if (bound < e.n_lo) {
        decide(v, Rule::PP_FAMILY, static_cast<double>(bound));
        return true;
    }
    return false;
}

bool rule_doubling(const EigenvalueEntry& e, Verdict& v) {
    if (e.lambda <= 0 || e.lambda % 4 != 0) return false;
    long long lq = e.lambda / 4;
    long long cap;
    if (lq % 2 == 1) {
        cap = 2LL * subspace_index_range(lq, Subspace::AROT)->lo;
    } else if (lq % 4 == 2) {
        cap = std::min(2LL * subspace_index_range(lq, Subspace::SROT)->lo,
                       4LL * subspace_index_range(lq, Subspace::AMIR)->lo);
    } else {
        cap = 2LL * subspace_index_range(lq, Subspace::SROT)->lo;
    }
    long long bound = 4 * cap - 3;
    if (bound < e.n_lo) {
        decide(v, Rule::DOUBLING, static_cast<double>(bound));
        return true;
    }
    return false;
}

bool rule_touch(const EigenvalueEntry& e, Verdict& v) {
    double bound = mu_upper_touch_count(e.lambda, max_p(e));
    if (bound < static_cast<double>(e.n_lo)) {
        decide(v, Rule::TOUCH_COUNT, bound);
        return true;
    }
    return false;
}

const Rational& blue_fraction_cached(int p, int q, bool swapped) {
    static std::map<std::tuple<int, int, bool>, Rational> cache;
    auto key = std::make_tuple(p, q, swapped);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Rational f = blue_recolor(build_chessboard(p, q, swapped)).area_fraction;
        it = cache.emplace(key, f).first;
    }
    return it->second;
}

bool rule_chessboard(const EigenvalueEntry& e, Verdict& v) {
    if (e.pairs.size() != 2) return false;
    int p = e.pairs[0].p, q = e.pairs[0].q;
    if (q < 1 || common_cosine_zeros(p, q)) return false;
    Rational frac = Rational(1) - blue_fraction_cached(p, q, false);
    if ((p + q) % 2 == 0) {
        // the opposite sign convention applies on half the angles
        Rational alt = Rational(1) - blue_fraction_cached(p, q, true);
        if (alt > frac) frac = alt;
    }
    double bound = mu_upper_inner_area(e.lambda, frac);
    if (bound < static_cast<double>(e.n_lo) && 1LL * (p + 1) * (q + 1) < e.n_lo) {
        decide(v, Rule::CHESSBOARD_AREA, bound);
        return true;
    }
    return false;
}

Rule special_rule_for(int p, int q) {
    if (p == 2 && q == 1) return Rule::SPECIAL_CASE_21;
    if (p == 3 && q == 2) return Rule::SPECIAL_CASE_32;
    if (p == 4 && q == 1) return Rule::SPECIAL_CASE_41;
    if (p == 6 && q == 3) return Rule::SPECIAL_CASE_63;
    if (p == 4 && q == 2) return Rule::SPECIAL_CASE_42;
    if (p == 6 && q == 4) return Rule::SPECIAL_CASE_64;
    if (p == 8 && q == 4) return Rule::SPECIAL_CASE_84;
    if (p == 8 && q == 3) return Rule::SPECIAL_CASE_83;
    if (p == 9 && q == 4) return Rule::SPECIAL_CASE_94;
    if (p == 10 && q == 4) return Rule::SPECIAL_CASE_104;
    return Rule::UNDECIDED;
}

bool sweepable(int p, int q) {
    static const std::set<std::pair<int, int>> pairs{{2, 1}, {3, 2}, {4, 1}, {4, 2},
                                                     {6, 3}, {6, 4}, {8, 4}};
    return pairs.count({p, q}) > 0;
}

int certified_sweep_max(int p, int q) {
    static std::map<std::pair<int, int>, int> cache;
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        SweepResult s = sweep_theta(p, q, 8);
        int mx = 0;
        bool all_ok = true;
        for (const auto& pt : s.points) {
            if (!pt.certified) all_ok = false;
            mx = std::max(mx, pt.count);
        }
        if (!all_ok) mx = -1;  // refuse to conclude from an uncertified sweep
        it = cache.emplace(key, mx).first;
    }
    return it->second;
}

bool rule_special(const EigenvalueEntry& e, Verdict& v) {
    if (e.pairs.size() != 2) return false;
    int p = e.pairs[0].p, q = e.pairs[0].q;
    if (!sweepable(p, q)) return false;
    int mx = certified_sweep_max(p, q);
    if (mx >= 1 && mx < e.n_lo) {
        decide(v, special_rule_for(p, q), static_cast<double>(mx));
        return true;
    }
    return false;
}

bool apply_middle(MiddleRule r, const EigenvalueEntry& e, Verdict& v) {
    switch (r) {
        case MiddleRule::SYM: return rule_sym(e, v);
        case MiddleRule::P0: return rule_p0(e, v);
        case MiddleRule::PP: return rule_pp(e, v);
        case MiddleRule::DOUBLING: return rule_doubling(e, v);
        case MiddleRule::TOUCH: return rule_touch(e, v);
        case MiddleRule::CHESSBOARD: return rule_chessboard(e, v);
    }
    return false;
}

long long spectrum_cutoff_for(long long n_max) {
    // N(lambda) ~ (pi/4) lambda, padded generously
    return std::max<long long>(245, static_cast<long long>(4.0 * n_max / M_PI) + 64);
}

}  // namespace

Verdict classify_entry(const EigenvalueEntry& e, const std::array<MiddleRule, 6>& order) {
    Verdict v;
    v.n_lo = e.n_lo;
    v.n_hi = e.n_hi;
    v.lambda = e.lambda;
    v.pairs = e.pairs;
    v.arot = subspace_index_range(e.lambda, Subspace::AROT);
    v.srot = subspace_index_range(e.lambda, Subspace::SROT);
    v.amir = subspace_index_range(e.lambda, Subspace::AMIR);
    v.reference_rule = published_rule(e.lambda);

    long long n = e.n_lo;
    if (is_sharp_index(n)) {
        v.status = Status::COURANT_SHARP;
        v.rule = Rule::DEFINITION_SHARP;
        v.bound_used = static_cast<double>(n);
        return v;
    }
    if (n >= 209) {
        v.status = Status::NOT_SHARP;
        v.rule = Rule::PLEIJEL_GATE;
        v.bound_used = pleijel_rhs(static_cast<double>(n));
        return v;
    }
    for (MiddleRule r : order)
        if (apply_middle(r, e, v)) return v;
    if (rule_special(e, v)) return v;
    v.status = Status::UNDECIDED;
    v.rule = Rule::UNDECIDED;
    v.bound_used = 0.0;
    return v;
}

Verdict classify(long long n) {
    if (n < 1) throw std::domain_error("classify: index must be >= 1");
    auto spectrum = enumerate_spectrum(spectrum_cutoff_for(n));
    const EigenvalueEntry* e = nullptr;
    for (const auto& en : spectrum)
        if (en.n_lo <= n && n <= en.n_hi) {
            e = &en;
            break;
        }
    if (!e) throw std::domain_error("classify: index beyond enumerated spectrum");

    if (n >= 209) {
        Verdict v = classify_entry(*e, kDefaultOrder);
        v.status = Status::NOT_SHARP;
        v.rule = Rule::PLEIJEL_GATE;
        v.bound_used = pleijel_rhs(static_cast<double>(n));
        v.parity_obstruction = false;
        return v;
    }
    if (n > e->n_lo) {
        // sharpness needs lambda_n > lambda_{n-1}; inside a multiplet only
        // the lowest index can qualify
        Verdict v = classify_entry(*e, kDefaultOrder);
        v.status = Status::NOT_SHARP;
        v.rule = Rule::MULTIPLICITY;
        v.bound_used = static_cast<double>(e->n_lo);
        v.parity_obstruction = false;
        return v;
    }
    return classify_entry(*e, kDefaultOrder);
}

std::vector<Verdict> generate_table(long long n_max) {
    std::vector<Verdict> out;
    for (const auto& e : enumerate_spectrum(spectrum_cutoff_for(n_max))) {
        if (e.n_lo > n_max) break;
        out.push_back(classify_entry(e, kDefaultOrder));
    }
    return out;
}

std::set<long long> courant_sharp_set(long long n_max) {
    std::set<long long> out;
    for (const auto& v : generate_table(n_max))
        if (v.status == Status::COURANT_SHARP) out.insert(v.n_lo);
    return out;
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::DEFINITION_SHARP: return "DEFINITION_SHARP";
        case Rule::MULTIPLICITY: return "MULTIPLICITY";
        case Rule::AROT: return "AROT";
        case Rule::SROT: return "SROT";
        case Rule::AMIR: return "AMIR";
        case Rule::P0_FAMILY: return "P0_FAMILY";
        case Rule::PP_FAMILY: return "PP_FAMILY";
        case Rule::DOUBLING: return "DOUBLING";
        case Rule::TOUCH_COUNT: return "TOUCH_COUNT";
        case Rule::CHESSBOARD_AREA: return "CHESSBOARD_AREA";
        case Rule::SPECIAL_CASE_21: return "SPECIAL_CASE_21";
        case Rule::SPECIAL_CASE_32: return "SPECIAL_CASE_32";
        case Rule::SPECIAL_CASE_41: return "SPECIAL_CASE_41";
        case Rule::SPECIAL_CASE_63: return "SPECIAL_CASE_63";
        case Rule::SPECIAL_CASE_42: return "SPECIAL_CASE_42";
        case Rule::SPECIAL_CASE_64: return "SPECIAL_CASE_64";
        case Rule::SPECIAL_CASE_84: return "SPECIAL_CASE_84";
        case Rule::SPECIAL_CASE_83: return "SPECIAL_CASE_83";
        case Rule::SPECIAL_CASE_94: return "SPECIAL_CASE_94";
        case Rule::SPECIAL_CASE_104: return "SPECIAL_CASE_104";
        case Rule::PLEIJEL_GATE: return "PLEIJEL_GATE";
        case Rule::UNDECIDED: return "UNDECIDED";
    }
    return "UNDECIDED";
}

const char* status_name(Status s) {
    switch (s) {
        case Status::COURANT_SHARP: return "COURANT_SHARP";
        case Status::NOT_SHARP: return "NOT_SHARP";
        case Status::UNDECIDED: return "UNDECIDED";
    }
    return "UNDECIDED";
}

namespace {

Rule rule_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Rule::UNDECIDED); ++i)
        if (s == rule_name(static_cast<Rule>(i))) return static_cast<Rule>(i);
    throw std::invalid_argument("unknown rule name: " + s);
}

Status status_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Status::UNDECIDED); ++i)
        if (s == status_name(static_cast<Status>(i))) return static_cast<Status>(i);
    throw std::invalid_argument("unknown status name: " + s);
}

std::string range_field(const std::optional<IndexRange>& r) {
    if (!r) return ",";
    return std::to_string(r->lo) + "," + std::to_string(r->hi);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string table_csv(const std::vector<Verdict>& table) {
    std::string out =
        "n_lo,n_hi,lambda,pairs,status,rule,bound,parity,"
        "arot_lo,arot_hi,srot_lo,srot_hi,amir_lo,amir_hi,paper_rule\n";
    char buf[64];
    for (const auto& v : table) {
        std::string pairs;
        for (size_t i = 0; i < v.pairs.size(); ++i) {
            if (i) pairs += '|';
            pairs += std::to_string(v.pairs[i].p) + ':' + std::to_string(v.pairs[i].q);
        }
        std::snprintf(buf, sizeof buf, "%.17g", v.bound_used);
        out += std::to_string(v.n_lo) + ',' + std::to_string(v.n_hi) + ',' +
               std::to_string(v.lambda) + ',' + pairs + ',' + status_name(v.status) + ',' +
               rule_name(v.rule) + ',' + buf + ',' + (v.parity_obstruction ? "1" : "0") + ',' +
               range_field(v.arot) + ',' + range_field(v.srot) + ',' + range_field(v.amir) + ',' +
               v.reference_rule + '\n';
    }
    return out;
}

std::vector<Verdict> table_from_csv(const std::string& csv) {
    std::vector<Verdict> out;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) return out;  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 15) throw std::invalid_argument("table_from_csv: bad column count");
        Verdict v;
        v.n_lo = std::stoll(f[0]);
        v.n_hi = std::stoll(f[1]);
        v.lambda = std::stoll(f[2]);
        std::string pt;
        std::istringstream ps(f[3]);
        while (std::getline(ps, pt, '|')) {
            size_t colon = pt.find(':');
            v.pairs.push_back(
                {std::stoi(pt.substr(0, colon)), std::stoi(pt.substr(colon + 1))});
        }
        v.status = status_from_name(f[4]);
        v.rule = rule_from_name(f[5]);
        v.bound_used = std::stod(f[6]);
        v.parity_obstruction = f[7] == "1";
        auto range = [&](const std::string& lo, const std::string& hi) -> std::optional<IndexRange> {
            if (lo.empty()) return std::nullopt;
            return IndexRange{std::stoi(lo), std::stoi(hi)};
        };
        v.arot = range(f[8], f[9]);
        v.srot = range(f[10], f[11]);
        v.amir = range(f[12], f[13]);
        v.reference_rule = f[14];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace nodal
