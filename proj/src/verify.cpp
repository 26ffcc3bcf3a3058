#include "nodal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/bounds.hpp"
#include "nodal/chessboard.hpp"
#include "nodal/classify.hpp"
#include "nodal/levels.hpp"
#include "nodal/nodal.hpp"
#include "nodal/spectrum.hpp"
#include "nodal/theta.hpp"

namespace nodal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v, int digits = 3) {
    char b[48];
    std::snprintf(b, sizeof b, "%.*f", digits, v);
    return b;
}

struct Gate {
    std::ostream& out;
    bool all = true;
    void line(int id, bool ok, const std::string& what) {
        out << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << what << "\n";
        all = all && ok;
    }
    void info(const std::string& s) { out << "    [INFO] " << s << "\n"; }
};

std::vector<std::vector<std::string>> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f.push_back(cur);
        rows.push_back(std::move(f));
    }
    return rows;
}

std::optional<IndexRange> opt_range(const std::string& lo, const std::string& hi) {
    if (lo.empty()) return std::nullopt;
    return IndexRange{std::stoi(lo), std::stoi(hi)};
}

std::string range_str(const std::optional<IndexRange>& r) {
    if (!r) return "(none)";
    return "(" + std::to_string(r->lo) + "," + std::to_string(r->hi) + ")";
}

// shorthand the reference table uses in its remark column
std::string census_code(Rule r) {
    switch (r) {
        case Rule::DEFINITION_SHARP: return "sharp";
        case Rule::AROT: return "arot";
        case Rule::SROT: return "srot";
        case Rule::AMIR: return "amir";
        case Rule::P0_FAMILY: return "p0";
        case Rule::PP_FAMILY: return "pp";
        case Rule::DOUBLING: return "doubling";
        case Rule::TOUCH_COUNT: return "touch";
        case Rule::CHESSBOARD_AREA: return "area";
        case Rule::SPECIAL_CASE_21: return "sweep21";
        case Rule::SPECIAL_CASE_32: return "sweep32";
        case Rule::SPECIAL_CASE_41: return "sweep41";
        case Rule::SPECIAL_CASE_63: return "sweep63";
        case Rule::SPECIAL_CASE_42: return "sweep42";
        case Rule::SPECIAL_CASE_64: return "sweep64";
        case Rule::SPECIAL_CASE_84: return "sweep84";
        case Rule::SPECIAL_CASE_83: return "sweep83";
        case Rule::SPECIAL_CASE_94: return "sweep94";
        case Rule::SPECIAL_CASE_104: return "sweep104";
        default: return "?";
    }
}

bool criterion_sharp_set(Gate& g) {
    auto t0 = Clock::now();
    std::set<long long> sharp = courant_sharp_set(208);
    bool ok = sharp == std::set<long long>{1, 2, 4, 5, 9};

    struct Witness {
        int p, q;
        double theta;
        long long n;
    };
    const Witness wit[] = {
        {0, 0, 0.0, 1},       {1, 0, M_PI / 4, 2}, {1, 1, 0.0, 4},
        {2, 0, M_PI / 4, 5},  {2, 2, 0.0, 9},
    };
    std::string counts;
    for (const auto& w : wit) {
        NodalReport r = count_nodal_domains(w.p, w.q, make_theta(w.theta));
        if (!r.certified || r.count != w.n) {
            ok = false;
            g.info("witness for n=" + std::to_string(w.n) + " gave count " +
                   std::to_string(r.count) + (r.certified ? "" : " (uncertified)"));
        }
        if (!counts.empty()) counts += ",";
        counts += std::to_string(r.count);
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    std::string got = "{";
    for (long long n : sharp) got += (got.size() > 1 ? "," : "") + std::to_string(n);
    got += "}";
    g.line(1, ok,
           "sharp index set " + got + ", witness counts " + counts + "; " + num(dt) + " s");
    return ok;
}

bool criterion_table(Gate& g, const std::string& data_dir) {
    auto t0 = Clock::now();
    auto table = generate_table(208);

    bool ok = true;
    long long next = 1;
    for (const auto& v : table) {
        if (v.n_lo != next) ok = false;
        next = v.n_hi + 1;
    }
    if (next != 209) {
        ok = false;
        g.info("table does not cover indices 1..208 contiguously");
    }

    struct Pub {
        long long n_lo = 0, n_hi = 0, lambda = 0;
        int p = 0, q = 0;
        std::optional<IndexRange> arot, srot, amir;
        std::string status, remark;
    };
    std::map<long long, Pub> pub;
    for (const auto& f : load_csv(data_dir + "/reference_table.csv")) {
        Pub r;
        r.n_lo = std::stoll(f[0]);
        r.n_hi = std::stoll(f[1]);
        r.p = std::stoi(f[2]);
        r.q = std::stoi(f[3]);
        r.lambda = std::stoll(f[4]);
        r.arot = opt_range(f[5], f[6]);
        r.srot = opt_range(f[7], f[8]);
        r.amir = opt_range(f[9], f[10]);
        r.status = f[11];
        r.remark = f[12];
        pub[r.lambda] = r;
    }

    // the printed table carries a handful of wrong symmetry-index cells; the
    // errata fixture restates them as recomputed, and each one is reported
    int corrected = 0;
    for (const auto& f : load_csv(data_dir + "/reference_table_errata.csv")) {
        long long lam = std::stoll(f[0]);
        auto it = pub.find(lam);
        if (it == pub.end()) {
            ok = false;
            g.info("errata row for unknown lambda=" + f[0]);
            continue;
        }
        auto corrected_range = opt_range(f[4], f[5]);
        auto& cell = f[1] == "arot"   ? it->second.arot
                     : f[1] == "srot" ? it->second.srot
                                      : it->second.amir;
        g.info("reference table deviation at lambda=" + f[0] + " (" + f[1] + "): printed (" +
               f[2] + "," + f[3] + "), recomputed " + range_str(corrected_range));
        cell = corrected_range;
        ++corrected;
    }

    if (table.size() != pub.size()) {
        ok = false;
        g.info("multiplet count " + std::to_string(table.size()) + " vs reference " +
               std::to_string(pub.size()));
    }

    int rule_diffs = 0;
    for (const auto& v : table) {
        auto it = pub.find(v.lambda);
        if (it == pub.end()) {
            ok = false;
            g.info("no reference row for lambda=" + std::to_string(v.lambda));
            continue;
        }
        const Pub& r = it->second;
        bool sharp = v.status == Status::COURANT_SHARP;
        bool row_ok = v.n_lo == r.n_lo && v.n_hi == r.n_hi && !v.pairs.empty() &&
                      v.pairs[0].p == r.p && v.pairs[0].q == r.q && v.arot == r.arot &&
                      v.srot == r.srot && v.amir == r.amir &&
                      v.status != Status::UNDECIDED && sharp == (r.status == "sharp");
        if (!row_ok) {
            ok = false;
            g.info("row mismatch at lambda=" + std::to_string(v.lambda) + ": got n=(" +
                   std::to_string(v.n_lo) + "," + std::to_string(v.n_hi) + ") pair (" +
                   (v.pairs.empty() ? "?" : std::to_string(v.pairs[0].p) + "," +
                                                std::to_string(v.pairs[0].q)) +
                   ") arot " + range_str(v.arot) + " srot " + range_str(v.srot) + " amir " +
                   range_str(v.amir) + " status " + status_name(v.status));
        }
        if (census_code(v.rule) != r.remark) {
            ++rule_diffs;
            g.info("rule choice differs at lambda=" + std::to_string(v.lambda) + ": engine " +
                   census_code(v.rule) + ", table " + r.remark + " (not gated)");
        }
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 300.0;
    g.line(2, ok,
           "classification table matches the reference on index ranges, eigenvalues, pairs, "
           "symmetry index ranges and status for all 208 indices (" +
               std::to_string(corrected) + " reference cells corrected, " +
               std::to_string(rule_diffs) + " rule-name differences, not gated); " + num(dt) +
               " s");
    return ok;
}

bool criterion_weyl(Gate& g) {
    auto t0 = Clock::now();
    WeylReport big = weyl_check(10000);
    WeylReport small = weyl_check(245);
    double dt = seconds_since(t0);
    bool ok = big.ok && small.ok && small.worst_margin > 0.2 && dt < 10.0;
    g.line(3, ok,
           "counting stays above (pi/4)lambda at every eigenvalue up to 10000 (worst margin " +
               num(big.worst_margin, 6) + " at lambda=" + std::to_string(big.worst_lambda) +
               "); worst margin up to 245 is " + num(small.worst_margin, 6) + " > 0.2; " +
               num(dt) + " s");
    return ok;
}

bool criterion_pleijel(Gate& g) {
    bool g209 = pleijel_gate(209);
    bool g208 = pleijel_gate(208);
    double flip = pleijel_flip_point();
    double m208 = flip - 208.0;
    double m209 = 209.0 - flip;
    bool ok = !g209 && g208 && m208 >= 0.04 && m209 >= 0.04;
    g.line(4, ok,
           "gate(209)=false, gate(208)=true; threshold crossing at n=" + num(flip, 6) +
               ", distances " + num(m208, 6) + " and " + num(m209, 6) +
               " >= 0.04 (raw curve gaps " + num(pleijel_rhs(208) - 208, 6) + ", " +
               num(209 - pleijel_rhs(209), 6) + ")");
    return ok;
}

bool criterion_chessboard(Gate& g) {
    auto t0 = Clock::now();
    auto blue = [](int p, int q) {
        Chessboard b = build_chessboard(p, q);
        return blue_recolor(b).area_fraction;
    };
    Rational b83 = blue(8, 3), b94 = blue(9, 4), b104 = blue(10, 4);
    bool ok = b83 == Rational(3, 8) && b94 == Rational(211, 648) && b104 == Rational(21, 100);
    if (!ok)
        g.info("blue fractions: (8,3) " + std::to_string(b83.numerator()) + "/" +
               std::to_string(b83.denominator()) + ", (9,4) " + std::to_string(b94.numerator()) +
               "/" + std::to_string(b94.denominator()) + ", (10,4) " +
               std::to_string(b104.numerator()) + "/" + std::to_string(b104.denominator()));
    double v73 = mu_upper_inner_area(73, Rational(1) - b83);
    double v97 = mu_upper_inner_area(97, Rational(1) - b94);
    double v116 = mu_upper_inner_area(116, Rational(1) - b104);
    ok = ok && std::abs(v73 - 56.8) <= 0.05 && std::abs(v97 - 71.5) <= 0.05 &&
         std::abs(v116 - 89.8) <= 0.05;
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    g.line(5, ok,
           "blue fractions 3/8, 211/648, 21/100 exact; area bounds " + num(v73, 4) + ", " +
               num(v97, 4) + ", " + num(v116, 4) + " within 0.05 of 56.8, 71.5, 89.8; " +
               num(dt) + " s");
    return ok;
}

bool criterion_counts(Gate& g) {
    auto t0 = Clock::now();
    struct Case {
        int p, q;
        double theta;
        int expected;
    };
    const double quarter = M_PI / 4, eighth = M_PI / 8;
    std::vector<Case> cases = {
        {2, 1, 0.0, 6},        {2, 1, eighth, 4},        {2, 1, quarter, 4},
        {3, 2, 0.0, 12},       {3, 2, eighth, 6},        {3, 2, quarter, 6},
        {4, 1, 0.0, 10},       {4, 1, eighth, 6},        {4, 1, quarter - 0.1, 8},
        {4, 1, quarter, 10},   {5, 2, 0.0, 18},          {5, 2, 0.1, 8},
        {5, 2, quarter - 0.1, 10},                       {5, 2, quarter, 10},
        {8, 3, 0.0, 36},       {8, 3, 0.1, 12},          {8, 3, quarter - 0.1, 16},
        {8, 3, quarter, 22},   {6, 4, 0.0, 35},          {4, 0, quarter, 13},
        {4, 0, 3 * quarter, 12},
    };
    // separable angle: every studied pair factors into (p+1)(q+1) domains
    for (auto [p, q] : std::initializer_list<std::pair<int, int>>{
             {3, 1}, {4, 2}, {4, 3}, {6, 3}, {8, 4}, {8, 5}, {9, 4}, {10, 4}})
        cases.push_back({p, q, 0.0, (p + 1) * (q + 1)});
    for (int p = 1; p <= 4; ++p) cases.push_back({p, p, 0.0, (p + 1) * (p + 1)});

    bool ok = true;
    int done = 0;
    for (const auto& c : cases) {
        NodalReport r = count_nodal_domains(c.p, c.q, make_theta(c.theta));
        bool hit = r.certified && r.count == c.expected &&
                   r.resolution >= 64 * std::max({c.p, c.q, 1});
        if (hit) {
            ++done;
            continue;
        }
        ok = false;
        g.info("count (" + std::to_string(c.p) + "," + std::to_string(c.q) + ") at theta=" +
               num(c.theta, 6) + ": expected " + std::to_string(c.expected) + ", computed " +
               std::to_string(r.count) + (r.certified ? "" : " (uncertified)") +
               " at resolution " + std::to_string(r.resolution));
        if (c.p == 5 && c.q == 2 && std::abs(c.theta - quarter) < 1e-15)
            g.info("at theta=pi/4 with p+q odd the family vanishes on the whole line "
                   "x+y=pi, so the certified grid counts the components of the complement "
                   "of that extra line (12); the pinned value 10 equals the one-sided limit "
                   "from theta below pi/4");
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    g.line(6, ok,
           std::to_string(done) + "/" + std::to_string(cases.size()) +
               " certified counts match the pinned values; " + num(dt) + " s");
    return ok;
}

bool criterion_sweeps(Gate& g) {
    auto t0 = Clock::now();
    SweepResult s52 = sweep_theta(5, 2);
    SweepResult s83 = sweep_theta(8, 3);
    SweepResult s41 = sweep_theta(4, 1);

    auto cert_max = [](const SweepResult& s, int& arg_ok) {
        int mx = 0;
        double arg = -1.0;
        for (const auto& pt : s.points)
            if (pt.certified && pt.count > mx) {
                mx = pt.count;
                arg = pt.theta.value;
            }
        arg_ok = std::abs(arg) < 1e-12 ? 1 : 0;
        return mx;
    };
    int at0_52 = 0, at0_83 = 0;
    int m52 = cert_max(s52, at0_52);
    int m83 = cert_max(s83, at0_83);
    bool ok = m52 == 18 && at0_52 && m83 == 36 && at0_83;
    if (!ok)
        g.info("certified maxima: (5,2) " + std::to_string(m52) + ", (8,3) " +
               std::to_string(m83));

    auto detected_near = [](const SweepResult& s, double target) {
        for (double t : s.critical_thetas)
            if (std::abs(t - target) <= 0.02) return true;
        return false;
    };
    struct Probe {
        const SweepResult* s;
        const char* label;
        double target;
    };
    const Probe probes[] = {
        {&s41, "(4,1)", 0.60}, {&s52, "(5,2)", 0.65}, {&s83, "(8,3)", 0.57},
        {&s83, "(8,3)", 0.61}, {&s83, "(8,3)", 0.74},
    };
    for (const auto& pr : probes)
        if (!detected_near(*pr.s, pr.target)) {
            ok = false;
            g.info(std::string("no detected critical angle within 0.02 of ") + pr.label +
                   " target " + num(pr.target, 2));
        }
    double dt = seconds_since(t0);
    g.line(7, ok,
           "certified sweep maxima 18 for (5,2) and 36 for (8,3), both at theta=0; all five "
           "critical angles detected within 0.02; " +
               num(dt) + " s");
    return ok;
}

bool criterion_levels(Gate& g) {
    auto t0 = Clock::now();
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> pick_p(2, 20);
    std::uniform_real_distribution<double> pick_t(-1.0, 1.0);
    int pairs = 0, checks = 0, hits = 0;
    int reported = 0;
    while (pairs < 200) {
        int p = pick_p(rng);
        if (p < 2) continue;
        std::uniform_int_distribution<int> pick_q(1, p - 1);
        int q = pick_q(rng);
        if (std::gcd(p, q) != 1 || common_cosine_zeros(p, q)) continue;
        ++pairs;
        for (int k = 0; k < 20; ++k) {
            double t = pick_t(rng);
            int got = count_level_solutions(p, q, t);
            ++checks;
            if (got == p) {
                ++hits;
            } else if (reported < 5) {
                ++reported;
                g.info("count_level_solutions(" + std::to_string(p) + "," + std::to_string(q) +
                       ", " + num(t, 6) + ") = " + std::to_string(got) + ", expected " +
                       std::to_string(p));
            }
        }
    }
    double dt = seconds_since(t0);
    bool ok = hits == checks;
    g.line(8, ok,
           std::to_string(hits) + "/" + std::to_string(checks) +
               " level counts equal p over 200 coprime pairs without shared cosine zeros; " +
               num(dt) + " s");
    return ok;
}

bool criterion_invariants(Gate& g) {
    auto t0 = Clock::now();
    const std::pair<int, int> pairs[] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2},
                                         {5, 2}, {6, 3}, {6, 4}, {8, 3}, {8, 4}};
    bool ok = true;
    int certified = 0, skipped = 0;
    for (auto [p, q] : pairs) {
        // pure means every pair of the eigenspace has both frequencies odd
        bool pure_odd = false;
        for (const auto& e : enumerate_spectrum(1LL * p * p + 1LL * q * q))
            if (e.lambda == 1LL * p * p + 1LL * q * q) {
                pure_odd = true;
                for (const auto& pr : e.pairs)
                    if (pr.p % 2 == 0 || pr.q % 2 == 0) pure_odd = false;
            }
        SweepResult s = sweep_theta(p, q, 8);
        for (const auto& pt : s.points) {
            if (!pt.certified) {
                ++skipped;
                continue;
            }
            ++certified;
            bool good = pt.count >= p + q + 1;
            if ((p + q) % 2 == 1 && pt.count % 2 != 0) good = false;
            if (pure_odd && pt.count % 4 != 0) good = false;
            if (!good) {
                ok = false;
                g.info("invariant violated at (" + std::to_string(p) + "," + std::to_string(q) +
                       ") theta=" + num(pt.theta.value, 6) + ": count " +
                       std::to_string(pt.count));
            }
        }
    }
    double dt = seconds_since(t0);
    ok = ok && certified > 0;
    g.line(9, ok,
           "lower bound p+q+1 and parity/divisibility invariants hold on " +
               std::to_string(certified) + "/" + std::to_string(certified) +
               " certified sweep samples (" + std::to_string(skipped) + " uncertified); " +
               num(dt) + " s");
    return ok;
}

bool criterion_criticals(Gate& g) {
    auto roots = solve_tangent_equation(4, 1);
    double target = std::atan(std::sqrt(2.0 * std::sqrt(10.0) - 5.0));
    bool ok = !roots.empty() && std::abs(roots.front() - target) < 1e-9;
    if (!ok) g.info("first tangent root of (4,1): " + (roots.empty() ? "none" : num(roots[0], 12)));

    auto ic21 = interior_critical_points(2, 1);
    if (!ic21.empty()) {
        ok = false;
        g.info("(2,1) reported " + std::to_string(ic21.size()) + " interior critical points");
    }
    auto ic41 = interior_critical_points(4, 1);
    if (ic41.empty()) ok = false;
    for (const auto& c : ic41)
        if (std::abs(c.theta - M_PI / 4) >= 1e-9) {
            ok = false;
            g.info("(4,1) interior critical at theta=" + num(c.theta, 12));
        }
    g.line(10, ok,
           "tangent root x1 of (4,1) matches arctan(sqrt(2 sqrt(10) - 5)) to 1e-9; (2,1) has "
           "no interior criticals; all (4,1) interior criticality sits at theta=pi/4");
    return ok;
}

}  // namespace

bool run_acceptance(std::ostream& out, const std::string& data_dir) {
    Gate g{out};
    int passed = 0;
    auto run = [&](bool (*fn)(Gate&), int id) {
        try {
            if (fn(g)) ++passed;
        } catch (const std::exception& ex) {
            g.line(id, false, std::string("exception: ") + ex.what());
        }
    };

    run(criterion_sharp_set, 1);
    try {
        if (criterion_table(g, data_dir)) ++passed;
    } catch (const std::exception& ex) {
        g.line(2, false, std::string("exception: ") + ex.what());
    }
    run(criterion_weyl, 3);
    run(criterion_pleijel, 4);
    run(criterion_chessboard, 5);
    run(criterion_counts, 6);
    run(criterion_sweeps, 7);
    run(criterion_levels, 8);
    run(criterion_invariants, 9);
    run(criterion_criticals, 10);

    out << passed << " of 10 criteria passed\n";
    return g.all;
}

}  // namespace nodal
