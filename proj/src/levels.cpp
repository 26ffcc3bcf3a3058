#include "nodal/levels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "nodal/chebyshev.hpp"

namespace nodal {

namespace {

constexpr double kRootTol = 1e-12;

double pos_inf() { return std::numeric_limits<double>::infinity(); }

int gcd_int(int a, int b) {
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// cosine quotient polynomials with the shared factor divided out
struct RatioPolys {
    Poly num, den;
};

const RatioPolys& regularized(int p, int q) {
    static std::map<std::pair<int, int>, RatioPolys> cache;
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        // the shared factor is T_g, g = gcd: v2(p) = v2(q) makes p/g and q/g odd
        Poly base = chebyshev_t(gcd_int(p, q));
        RatioPolys rp{poly_divide_exact(chebyshev_t(p), base),
                      poly_divide_exact(chebyshev_t(q), base)};
        it = cache.emplace(key, std::move(rp)).first;
    }
    return it->second;
}

double tangent_g(int p, int q, double x) {
    return p * std::sin(p * x) * std::cos(q * x) - q * std::cos(p * x) * std::sin(q * x);
}

std::vector<double> tangent_roots_scan(int p, int q) {
    std::vector<double> roots;
    int grid = 64 * std::max(p, 1);
    double h = M_PI / grid;
    double prev = tangent_g(p, q, h);
    bool prev_zero = std::abs(prev) < 1e-12;
    if (prev_zero) roots.push_back(h);
    for (int i = 2; i < grid; ++i) {
        double x = i * h;
        double cur = tangent_g(p, q, x);
        bool cur_zero = std::abs(cur) < 1e-12;
        if (cur_zero) {
            roots.push_back(x);
        } else if (!prev_zero && (prev < 0) != (cur < 0)) {
            double a = x - h, b = x, fa = prev;
            while (b - a > kRootTol) {
                double m = 0.5 * (a + b);
                double fm = tangent_g(p, q, m);
                if ((fa < 0) == (fm < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
        prev_zero = cur_zero;
    }
    return roots;
}

bool near_any(const std::vector<double>& xs, double x, double tol) {
    for (double v : xs)
        if (std::abs(v - x) < tol) return true;
    return false;
}

}  // namespace

int v2(int n) {
    if (n == 0) return 64;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

bool common_cosine_zeros(int p, int q) {
    if (p <= 0 || q <= 0) return false;
    return v2(p) == v2(q);
}

std::vector<double> common_zero_positions(int p, int q) {
    std::vector<double> out;
    if (!common_cosine_zeros(p, q)) return out;
    int m = gcd_int(p, q);
    for (int k = 0; k < m; ++k) out.push_back((2.0 * k + 1.0) * M_PI / (2.0 * m));
    return out;
}

double f_ratio(int p, int q, double x) {
    if (p <= 0 || q < 0) throw std::domain_error("f_ratio: needs p >= 1, q >= 0");
    if (q == 0) return std::cos(p * x);
    if (common_cosine_zeros(p, q)) {
        const RatioPolys& rp = regularized(p, q);
        double u = std::cos(x);
        double den = eval_poly(rp.den, u);
        if (std::abs(den) < 1e-13) {
            // sign of the limit from below marks the pole
            double u2 = std::cos(x - 1e-7);
            double s = eval_poly(rp.num, u2) / eval_poly(rp.den, u2);
            return s >= 0 ? pos_inf() : -pos_inf();
        }
        return eval_poly(rp.num, u) / den;
    }
    double cq = std::cos(q * x);
    if (std::abs(cq) < 1e-13) {
        // cos(q(x-e)) ~ q e sin(qx), so the left limit carries this sign
        double s = std::cos(p * x) * std::sin(q * x);
        return s >= 0 ? pos_inf() : -pos_inf();
    }
    return std::cos(p * x) / cq;
}

bool f_is_pole(int p, int q, double x) {
    if (q <= 0) return false;
    if (std::abs(std::cos(q * x)) >= 1e-9) return false;
    return std::abs(std::cos(p * x)) >= 1e-9;  // a shared zero is removable
}

std::vector<double> solve_tangent_equation(int p, int q) {
    if (p <= 0 || q < 0 || q >= p)
        throw std::domain_error("solve_tangent_equation: needs p > q >= 0");
    if (q == 0) {
        std::vector<double> roots;
        for (int k = 1; k < p; ++k) roots.push_back(k * M_PI / p);
        return roots;
    }
    int g = gcd_int(p, q);
    if (g > 1) {
        // period pi/g: reuse the coprime roots, then add the grid points
        // where both tangents vanish
        std::vector<double> base = solve_tangent_equation(p / g, q / g);
        std::vector<double> roots;
        for (int k = 0; k < g; ++k)
            for (double r : base) roots.push_back((r + k * M_PI) / g);
        for (int k = 1; k < g; ++k) roots.push_back(k * M_PI / g);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    std::vector<double> roots = tangent_roots_scan(p, q);
    // shared cosine zeros solve the tangent equation trivially; drop them
    std::vector<double> out;
    for (double r : roots)
        if (std::abs(std::cos(p * r)) >= 1e-9 || std::abs(std::cos(q * r)) >= 1e-9)
            out.push_back(r);
    return out;
}

std::vector<InteriorCritical> interior_critical_points(int p, int q) {
    std::vector<double> roots = solve_tangent_equation(p, q);
    std::vector<double> fvals;
    fvals.reserve(roots.size());
    for (double r : roots) fvals.push_back(f_ratio(p, q, r));
    std::vector<InteriorCritical> out;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            double th = std::atan2(-fvals[j], fvals[i]);
            while (th < 0) th += M_PI;
            while (th >= M_PI) th -= M_PI;
            out.push_back({roots[i], roots[j], th});
        }
    return out;
}

std::vector<double> boundary_critical_thetas(int p, int q) {
    std::vector<double> out;
    for (double r : solve_tangent_equation(p, q)) {
        double v = std::abs(f_ratio(p, q, r));
        double th = v >= 1.0 ? std::atan(1.0 / v) : std::atan(v);
        if (!near_any(out, th, 1e-10)) out.push_back(th);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// monotone pieces of the regularized ratio: nodes are the endpoints,
// critical points (tangent roots and shared zeros) and true poles
struct LevelPieces {
    std::vector<double> nodes;
    std::vector<bool> pole;
    std::vector<bool> shared;
    std::vector<double> value;  // finite nodes only
};

LevelPieces build_pieces(int p, int q) {
    std::vector<double> nodes{0.0, M_PI};
    for (double r : solve_tangent_equation(p, q)) nodes.push_back(r);
    std::vector<double> cz = common_zero_positions(p, q);
    for (double z : cz) nodes.push_back(z);
    for (int k = 0; k < q; ++k) {
        double x = (2.0 * k + 1.0) * M_PI / (2.0 * q);
        if (std::abs(std::cos(p * x)) >= 1e-9) nodes.push_back(x);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-11; }),
                nodes.end());

    LevelPieces P;
    P.nodes = std::move(nodes);
    for (double x : P.nodes) {
        bool sh = near_any(cz, x, 1e-10);
        bool pl = !sh && f_is_pole(p, q, x);
        P.shared.push_back(sh);
        P.pole.push_back(pl);
        P.value.push_back(pl ? 0.0 : f_ratio(p, q, x));
    }
    return P;
}

double inf_sign_at(int p, int q, double x) {
    return f_ratio(p, q, x) >= 0 ? pos_inf() : -pos_inf();
}

// shared walk over the pieces: count or collect the level-t solutions
void walk_level(int p, int q, double t, int* count, std::vector<double>* sols) {
    if (p <= 0 || q < 0 || q >= p)
        throw std::domain_error("level solutions: needs p > q >= 0");
    LevelPieces P = build_pieces(p, q);
    size_t n = P.nodes.size();
    auto emit = [&](double x) {
        if (count) ++*count;
        if (sols) sols->push_back(x);
    };
    for (size_t i = 0; i < n; ++i) {
        if (P.shared[i]) {
            emit(P.nodes[i]);  // both cosines vanish: a solution at every level
        } else if (!P.pole[i] && std::abs(P.value[i] - t) < kRootTol) {
            emit(P.nodes[i]);
        }
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        double a = P.nodes[i], b = P.nodes[i + 1];
        double eps = (b - a) * 1e-7;
        double va = P.pole[i] ? inf_sign_at(p, q, a + eps) : P.value[i];
        double vb = P.pole[i + 1] ? inf_sign_at(p, q, b - eps) : P.value[i + 1];
        // a hit already booked at a finite endpoint must not re-count here
        if (!P.pole[i] && !P.shared[i] && std::abs(va - t) < kRootTol) continue;
        if (!P.pole[i + 1] && !P.shared[i + 1] && std::abs(vb - t) < kRootTol) continue;
        double lo = std::min(va, vb), hi = std::max(va, vb);
        if (!(lo < t && t < hi)) continue;
        if (count) ++*count;
        if (!sols) continue;
        // bisect on the monotone piece, nudging off infinite endpoints
        double la = a + eps, lb = b - eps;
        double fa = f_ratio(p, q, la) - t, fb = f_ratio(p, q, lb) - t;
        int guard = 0;
        while ((fa < 0) == (fb < 0) && guard < 10) {
            eps *= 0.1;
            la = a + eps;
            lb = b - eps;
            fa = f_ratio(p, q, la) - t;
            fb = f_ratio(p, q, lb) - t;
            ++guard;
        }
        if ((fa < 0) == (fb < 0)) {
            sols->push_back(0.5 * (a + b));  // root pinched against a node
            continue;
        }
        while (lb - la > kRootTol) {
            double m = 0.5 * (la + lb);
            double fm = f_ratio(p, q, m) - t;
            if ((fa < 0) == (fm < 0)) {
                la = m;
                fa = fm;
            } else {
                lb = m;
            }
        }
        sols->push_back(0.5 * (la + lb));
    }
    if (sols) std::sort(sols->begin(), sols->end());
}

}  // namespace

int count_level_solutions(int p, int q, double t) {
    int count = 0;
    walk_level(p, q, t, &count, nullptr);
    return count;
}

std::vector<double> level_solutions(int p, int q, double t) {
    std::vector<double> sols;
    walk_level(p, q, t, nullptr, &sols);
    return sols;
}

std::vector<double> boundary_zeros(int p, int q, const Theta& th, Side side) {
    if (p <= 0 || q < 0 || q > p) throw std::domain_error("boundary_zeros: needs p >= q >= 0");
    double c = th.c, s = th.s;
    bool odd = ((p + q) & 1) == 1;
    auto lattice_zeros = [](int m) {
        std::vector<double> z;
        for (int k = 0; k < m; ++k) z.push_back((2.0 * k + 1.0) * M_PI / (2.0 * m));
        return z;
    };
    std::vector<double> sol;
    if (p == q) {
        // degenerate family (c+s) cos(px) cos(py): every side carries the
        // p-lattice unless the function vanishes identically
        if (std::abs(c + s) > 1e-15 && p > 0) sol = lattice_zeros(p);
        return sol;
    }
    switch (side) {
        case Side::Y0:
        case Side::YPI: {
            if (th.tag == ThetaTag::HALF) {
                if (q > 0) sol = lattice_zeros(q);
                break;
            }
            double t = -s / c;
            if (side == Side::YPI && odd) t = s / c;
            sol = level_solutions(p, q, t);
            break;
        }
        case Side::X0:
        case Side::XPI: {
            if (th.tag == ThetaTag::ZERO) {
                if (q > 0) sol = lattice_zeros(q);
                break;
            }
            double t = -c / s;
            if (side == Side::XPI && odd) t = c / s;
            sol = level_solutions(p, q, t);
            break;
        }
    }
    std::vector<double> open;
    for (double x : sol)
        if (x > 1e-9 && x < M_PI - 1e-9) open.push_back(x);
    return open;
}

const char* side_name(Side s) {
    switch (s) {
        case Side::X0: return "x=0";
        case Side::XPI: return "x=pi";
        case Side::Y0: return "y=0";
        case Side::YPI: return "y=pi";
    }
    return "";
}

}  // namespace nodal
