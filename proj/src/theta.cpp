#include "nodal/theta.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace nodal {

namespace {

constexpr double kTagTol = 1e-14;

void apply_tag(Theta& th) {
    switch (th.tag) {
        case ThetaTag::ZERO: th.c = 1.0; th.s = 0.0; break;
        case ThetaTag::QUARTER: th.c = 1.0; th.s = 1.0; break;
        case ThetaTag::HALF: th.c = 0.0; th.s = 1.0; break;
        case ThetaTag::THREE_QUARTER: th.c = -1.0; th.s = 1.0; break;
        case ThetaTag::GENERIC:
            th.c = std::cos(th.value);
            th.s = std::sin(th.value);
            break;
    }
}

// parses a full double; returns false unless the whole token is consumed
bool parse_double(std::string_view sv, double& out) {
    if (sv.empty()) return false;
    std::string buf(sv);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

}  // namespace

Theta make_theta(double v) {
    double t = std::fmod(v, M_PI);  // the family repeats with period pi up to sign
    if (t < 0) t += M_PI;
    Theta th;
    if (t < kTagTol || M_PI - t < kTagTol) {
        th.tag = ThetaTag::ZERO;
        th.value = 0.0;
    } else if (std::abs(t - M_PI / 4) < kTagTol) {
        th.tag = ThetaTag::QUARTER;
        th.value = M_PI / 4;
    } else if (std::abs(t - M_PI / 2) < kTagTol) {
        th.tag = ThetaTag::HALF;
        th.value = M_PI / 2;
    } else if (std::abs(t - 3 * M_PI / 4) < kTagTol) {
        th.tag = ThetaTag::THREE_QUARTER;
        th.value = 3 * M_PI / 4;
    } else {
        th.tag = ThetaTag::GENERIC;
        th.value = t;
    }
    apply_tag(th);
    return th;
}

Theta make_theta(ThetaTag tag) {
    Theta th;
    th.tag = tag;
    switch (tag) {
        case ThetaTag::ZERO: th.value = 0.0; break;
        case ThetaTag::QUARTER: th.value = M_PI / 4; break;
        case ThetaTag::HALF: th.value = M_PI / 2; break;
        case ThetaTag::THREE_QUARTER: th.value = 3 * M_PI / 4; break;
        case ThetaTag::GENERIC: th.value = 0.0; th.tag = ThetaTag::ZERO; break;
    }
    apply_tag(th);
    return th;
}

std::optional<Theta> parse_theta(std::string_view text) {
    // trim whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    size_t pos = text.find("pi");
    if (pos == std::string_view::npos) {
        double v;
        if (!parse_double(text, v)) return std::nullopt;
        return make_theta(v);
    }

    std::string_view pre = text.substr(0, pos);
    std::string_view post = text.substr(pos + 2);
    if (!pre.empty() && pre.back() == '*') pre.remove_suffix(1);

    double coef = 1.0;
    if (pre == "-") coef = -1.0;
    else if (!pre.empty() && !parse_double(pre, coef)) return std::nullopt;

    double denom = 1.0;
    if (!post.empty()) {
        if (post.front() != '/') return std::nullopt;
        post.remove_prefix(1);
        if (!parse_double(post, denom) || denom == 0.0) return std::nullopt;
    }
    return make_theta(coef * M_PI / denom);
}

const char* theta_tag_name(ThetaTag tag) {
    switch (tag) {
        case ThetaTag::ZERO: return "0";
        case ThetaTag::QUARTER: return "pi/4";
        case ThetaTag::HALF: return "pi/2";
        case ThetaTag::THREE_QUARTER: return "3pi/4";
        case ThetaTag::GENERIC: return nullptr;
    }
    return nullptr;
}

}  // namespace nodal
