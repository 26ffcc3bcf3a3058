#include "nodal/nodal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nodal/symmetry.hpp"

namespace nodal {

double eval_phi(int p, int q, const Theta& th, double x, double y) {
    return th.c * std::cos(p * x) * std::cos(q * y) + th.s * std::cos(q * x) * std::cos(p * y);
}

int base_resolution(int p, int q) {
    return 64 * std::max({p, q, 1});
}

namespace {

constexpr int kEdgeSamples = 9;
constexpr double kCenterTol = 1e-12;

int find_root(std::vector<int32_t>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

void unite(std::vector<int32_t>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[b] = a;
}

inline int exact_sign(double v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

int grid_count(int p, int q, const Theta& th, int res) {
    if (res < 2) throw std::domain_error("grid_count: resolution too small");
    const double h = M_PI / res;
    const double c = th.c, s = th.s;

    // all cosine evaluations come from tables so edges reuse exact values
    std::vector<double> cpc(res), cqc(res), cpl(res + 1), cql(res + 1);
    std::vector<double> cpe(res * kEdgeSamples), cqe(res * kEdgeSamples);
    for (int i = 0; i < res; ++i) {
        double x = (i + 0.5) * h;
        cpc[i] = std::cos(p * x);
        cqc[i] = std::cos(q * x);
        for (int k = 0; k < kEdgeSamples; ++k) {
            double e = (i + (k + 0.5) / kEdgeSamples) * h;
            cpe[i * kEdgeSamples + k] = std::cos(p * e);
            cqe[i * kEdgeSamples + k] = std::cos(q * e);
        }
    }
    for (int i = 0; i <= res; ++i) {
        double x = i * h;
        cpl[i] = std::cos(p * x);
        cql[i] = std::cos(q * x);
    }

    std::vector<int8_t> sign(static_cast<size_t>(res) * res);
    for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
            double v = c * cpc[i] * cqc[j] + s * cqc[i] * cpc[j];
            sign[static_cast<size_t>(j) * res + i] =
                std::abs(v) < kCenterTol ? 0 : (v > 0 ? 1 : -1);
        }

    std::vector<int32_t> parent(static_cast<size_t>(res) * res);
    std::iota(parent.begin(), parent.end(), 0);

    // merge across an edge only when every subsample on it keeps the sign
    auto v_edge_clear = [&](int iline, int j, int sg) {
        for (int k = 0; k < kEdgeSamples; ++k) {
            double v = c * cpl[iline] * cqe[j * kEdgeSamples + k] +
                       s * cql[iline] * cpe[j * kEdgeSamples + k];
            if (exact_sign(v) != sg) return false;
        }
        return true;
    };
    auto h_edge_clear = [&](int i, int jline, int sg) {
        for (int k = 0; k < kEdgeSamples; ++k) {
            double v = c * cpe[i * kEdgeSamples + k] * cql[jline] +
                       s * cqe[i * kEdgeSamples + k] * cpl[jline];
            if (exact_sign(v) != sg) return false;
        }
        return true;
    };

    // |grad| <= sqrt(2)(p+q) and the shared edge stays within h/sqrt(2) of
    // either center, so a center value above (p+q)h certifies the edge with
    // the same outcome the subsamples would give
    const double clear = 1.0000001 * h * (p + q);
    auto center_val = [&](int i, int j) {
        return c * cpc[i] * cqc[j] + s * cqc[i] * cpc[j];
    };

    for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
            int idx = j * res + i;
            int sg = sign[idx];
            if (sg == 0) continue;
            if (i + 1 < res && sign[idx + 1] == sg) {
                if (std::abs(center_val(i, j)) > clear ||
                    std::abs(center_val(i + 1, j)) > clear || v_edge_clear(i + 1, j, sg))
                    unite(parent, idx, idx + 1);
            }
            if (j + 1 < res && sign[idx + res] == sg) {
                if (std::abs(center_val(i, j)) > clear ||
                    std::abs(center_val(i, j + 1)) > clear || h_edge_clear(i, j + 1, sg))
                    unite(parent, idx, idx + res);
            }
        }

    int count = 0;
    for (int idx = 0; idx < res * res; ++idx)
        if (sign[idx] != 0 && find_root(parent, idx) == idx) ++count;
    return count;
}

NodalReport count_nodal_domains(int p, int q, const Theta& th_in, int resolution) {
    if (p < 0 || q < 0) throw std::domain_error("count_nodal_domains: negative frequency");
    // (p,q,c,s) and (q,p,s,c) are literally the same function
    Theta th = th_in;
    if (p < q) {
        std::swap(p, q);
        th = make_theta(M_PI / 2 - th_in.value);
    }
    int minimum = 32 * std::max({p, q, 1});
    if (resolution > 0 && resolution < minimum)
        throw std::domain_error("count_nodal_domains: resolution below safe minimum");
    int res = resolution > 0 ? resolution : base_resolution(p, q);

    NodalReport r;
    r.p = p;
    r.q = q;
    r.theta = th;

    int count = grid_count(p, q, th, res);
    bool certified = false;
    for (int step = 0; step < 4; ++step) {
        int c2 = grid_count(p, q, th, 2 * res);
        if (c2 == count) {
            certified = true;
            break;
        }
        res *= 2;
        count = c2;
    }
    r.count = count;
    r.resolution = res;
    r.certified = certified;

    if (p == 0 && q == 0) {
        bool flat = std::abs(th.c + th.s) < kCenterTol;
        r.corner_hits = {flat, flat, flat, flat};
        return r;
    }

    int hp = std::max(p, q), hq = std::min(p, q);
    r.boundary_touches = {static_cast<int>(boundary_zeros(hp, hq, th, Side::X0).size()),
                          static_cast<int>(boundary_zeros(hp, hq, th, Side::XPI).size()),
                          static_cast<int>(boundary_zeros(hp, hq, th, Side::Y0).size()),
                          static_cast<int>(boundary_zeros(hp, hq, th, Side::YPI).size())};

    auto par = [](int m) { return (m & 1) ? -1.0 : 1.0; };
    auto hits = [](double v) { return std::abs(v) < kCenterTol; };
    r.corner_hits = {hits(th.c + th.s),
                     hits(th.c * par(p) + th.s * par(q)),
                     hits(th.c * par(q) + th.s * par(p)),
                     hits(par(p + q) * (th.c + th.s))};

    if (hp > hq) r.interior_criticals = interior_critical_points(hp, hq);
    return r;
}

int product_count(int p, int q) {
    return (p + 1) * (q + 1);
}

int p0_max_count(int p) {
    int sq = (p + 1) * (p + 1);
    return (p & 1) ? sq / 2 : (sq + 1) / 2;
}

int touching_lower_bound(int p, int q) {
    return 2 * (p + q);
}

int mu_lower(int p, int q) {
    return p + q + 1;
}

SweepResult sweep_theta(int p, int q, int samples) {
    if (p <= 0 || q < 0 || q >= p) throw std::domain_error("sweep_theta: needs p > q >= 0");
    bool odd = ((p + q) & 1) == 1;
    double L = odd ? M_PI / 4 : M_PI;

    std::vector<double> crit{0.0, M_PI / 4};
    if (!odd) {
        crit.push_back(M_PI / 2);
        crit.push_back(3 * M_PI / 4);
    }
    auto fold = [&](double t) {
        while (t < 0) t += M_PI;
        while (t >= M_PI) t -= M_PI;
        if (odd) t = reduce_theta(p, q, make_theta(t)).theta.value;
        return t;
    };
    for (const auto& ic : interior_critical_points(p, q)) {
        crit.push_back(fold(ic.theta));
        if (!odd) crit.push_back(fold(M_PI / 2 - ic.theta));
    }
    for (double a : boundary_critical_thetas(p, q)) {
        crit.push_back(a);
        if (!odd) {
            crit.push_back(M_PI / 2 - a);
            crit.push_back(M_PI / 2 + a);
            crit.push_back(M_PI - a);
        }
    }
    std::sort(crit.begin(), crit.end());
    std::vector<double> skel;
    for (double t : crit) {
        if (t < -1e-12 || t > L + 1e-12) continue;
        if (!odd && t > M_PI - 1e-9) continue;  // seam angle repeats theta = 0
        if (!skel.empty() && t - skel.back() < 1e-10) continue;
        skel.push_back(std::clamp(t, 0.0, L));
    }

    std::vector<std::pair<double, bool>> raw;  // angle, is critical
    for (double t : skel) raw.push_back({t, true});
    for (size_t i = 0; i + 1 < skel.size(); ++i)
        raw.push_back({0.5 * (skel[i] + skel[i + 1]), false});
    for (int u = 0; u < samples; ++u)
        raw.push_back({L * (u + 0.5) / samples, false});
    std::sort(raw.begin(), raw.end());
    std::vector<std::pair<double, bool>> eval;
    for (auto& [t, is_crit] : raw) {
        if (!eval.empty() && t - eval.back().first < 1e-10) eval.back().second |= is_crit;
        else eval.push_back({t, is_crit});
    }

    SweepResult out;
    out.critical_thetas = skel;
    out.points.resize(eval.size());

    // the points are independent, so spread them over the hardware threads
    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (size_t k; (k = cursor.fetch_add(1)) < eval.size();) {
            try {
                NodalReport rep = count_nodal_domains(p, q, make_theta(eval[k].first));
                out.points[k].theta = rep.theta;
                out.points[k].count = rep.count;
                out.points[k].certified = rep.certified;
                out.points[k].at_critical = eval[k].second;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    size_t nthreads = std::min<size_t>(eval.size(), hw ? hw : 1);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& pt : out.points)
        if (pt.count > out.max_count) {
            out.max_count = pt.count;
            out.argmax_theta = pt.theta.value;
        }
    return out;
}

}  // namespace nodal
