#include "nodal/serialize.hpp"

#include <json.hpp>

namespace nodal {

using json = nlohmann::ordered_json;

namespace {

json entry_json(const EigenvalueEntry& e) {
    json pairs = json::array();
    for (const auto& pr : e.pairs) pairs.push_back({pr.p, pr.q});
    return json{{"lambda", e.lambda}, {"pairs", pairs}, {"nLo", e.n_lo}, {"nHi", e.n_hi}};
}

json range_json(const std::optional<IndexRange>& r) {
    if (!r) return nullptr;
    return json::array({r->lo, r->hi});
}

json verdict_json(const Verdict& v) {
    json pairs = json::array();
    for (const auto& pr : v.pairs) pairs.push_back({pr.p, pr.q});
    json j{{"nLo", v.n_lo},
           {"nHi", v.n_hi},
           {"lambda", v.lambda},
           {"pairs", pairs},
           {"status", status_name(v.status)},
           {"rule", rule_name(v.rule)},
           {"bound", v.bound_used},
           {"parity", v.parity_obstruction},
           {"arot", range_json(v.arot)},
           {"srot", range_json(v.srot)},
           {"amir", range_json(v.amir)}};
    j["paperRule"] = v.reference_rule.empty() ? json(nullptr) : json(v.reference_rule);
    return j;
}

}  // namespace

std::string to_json(const EigenvalueEntry& e) {
    return entry_json(e).dump();
}

std::string to_json(const std::vector<EigenvalueEntry>& es) {
    json arr = json::array();
    for (const auto& e : es) arr.push_back(entry_json(e));
    return arr.dump();
}

std::string to_json(const NodalReport& r) {
    const char* tag = theta_tag_name(r.theta.tag);
    json crit = json::array();
    for (const auto& c : r.interior_criticals) crit.push_back({c.x, c.y, c.theta});
    json j{{"p", r.p},
           {"q", r.q},
           {"theta", r.theta.value},
           {"thetaTag", tag ? json(tag) : json(nullptr)},
           {"count", r.count},
           {"certified", r.certified},
           {"resolution", r.resolution},
           {"boundaryTouches", json::array({r.boundary_touches[0], r.boundary_touches[1],
                                            r.boundary_touches[2], r.boundary_touches[3]})},
           {"cornerHits", json::array({r.corner_hits[0], r.corner_hits[1], r.corner_hits[2],
                                       r.corner_hits[3]})},
           {"criticalPoints", crit}};
    return j.dump();
}

std::string to_json(const BoundReport& r) {
    json j{{"n", r.n},
           {"lambda", r.lambda},
           {"kind", bound_kind_name(r.kind)},
           {"bound", r.bound_value},
           {"excludes", r.excludes_courant_sharp},
           {"areaFraction",
            json::array({r.area_fraction.numerator(), r.area_fraction.denominator()})}};
    return j.dump();
}

std::string to_json(const Verdict& v) {
    return verdict_json(v).dump();
}

std::string to_json(const std::vector<Verdict>& table) {
    json arr = json::array();
    for (const auto& v : table) arr.push_back(verdict_json(v));
    return arr.dump();
}

std::string to_json(const SweepResult& s, int p, int q) {
    json pts = json::array();
    for (const auto& pt : s.points) {
        const char* tag = theta_tag_name(pt.theta.tag);
        pts.push_back({{"theta", pt.theta.value},
                       {"thetaTag", tag ? json(tag) : json(nullptr)},
                       {"count", pt.count},
                       {"certified", pt.certified},
                       {"atCritical", pt.at_critical}});
    }
    json j{{"p", p},
           {"q", q},
           {"maxCount", s.max_count},
           {"argmaxTheta", s.argmax_theta},
           {"criticalThetas", s.critical_thetas},
           {"points", pts}};
    return j.dump();
}

std::vector<Verdict> table_from_json(const std::string& text) {
    json arr = json::parse(text);
    std::vector<Verdict> out;
    for (const auto& j : arr) {
        Verdict v;
        v.n_lo = j.at("nLo").get<long long>();
        v.n_hi = j.at("nHi").get<long long>();
        v.lambda = j.at("lambda").get<long long>();
        for (const auto& pr : j.at("pairs"))
            v.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
        std::string st = j.at("status").get<std::string>();
        std::string rl = j.at("rule").get<std::string>();
        v.status = Status::UNDECIDED;
        for (int i = 0; i <= static_cast<int>(Status::UNDECIDED); ++i)
            if (st == status_name(static_cast<Status>(i))) v.status = static_cast<Status>(i);
        v.rule = Rule::UNDECIDED;
        for (int i = 0; i <= static_cast<int>(Rule::UNDECIDED); ++i)
            if (rl == rule_name(static_cast<Rule>(i))) v.rule = static_cast<Rule>(i);
        v.bound_used = j.at("bound").get<double>();
        v.parity_obstruction = j.at("parity").get<bool>();
        auto range = [&](const char* key) -> std::optional<IndexRange> {
            const auto& r = j.at(key);
            if (r.is_null()) return std::nullopt;
            return IndexRange{r.at(0).get<int>(), r.at(1).get<int>()};
        };
        v.arot = range("arot");
        v.srot = range("srot");
        v.amir = range("amir");
        if (!j.at("paperRule").is_null()) v.reference_rule = j.at("paperRule").get<std::string>();
        out.push_back(std::move(v));
    }
    return out;
}

std::string spectrum_csv(const std::vector<EigenvalueEntry>& es) {
    std::string out = "lambda,n_lo,n_hi,pairs\n";
    for (const auto& e : es) {
        std::string pairs;
        for (size_t i = 0; i < e.pairs.size(); ++i) {
            if (i) pairs += '|';
            pairs += std::to_string(e.pairs[i].p) + ':' + std::to_string(e.pairs[i].q);
        }
        out += std::to_string(e.lambda) + ',' + std::to_string(e.n_lo) + ',' +
               std::to_string(e.n_hi) + ',' + pairs + '\n';
    }
    return out;
}

}  // namespace nodal
