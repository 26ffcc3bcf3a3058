#include "nodal/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "nodal/chessboard.hpp"
#include "nodal/levels.hpp"
#include "nodal/nodal.hpp"

namespace nodal {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
           fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

// contour segments of one grid cell by linear interpolation on its edges
void cell_segments(double x0, double y0, double hx, double hy, double v00, double v10,
                   double v01, double v11, std::string& path) {
    struct Pt {
        double x, y;
    };
    Pt pts[4];
    int npts = 0;
    auto cross = [&](double a, double b, double ax, double ay, double bx, double by) {
        if ((a < 0) == (b < 0)) return;
        if (a == b) return;
        double t = a / (a - b);
        pts[npts++] = {ax + t * (bx - ax), ay + t * (by - ay)};
    };
    cross(v00, v10, x0, y0, x0 + hx, y0);
    cross(v10, v11, x0 + hx, y0, x0 + hx, y0 + hy);
    cross(v11, v01, x0 + hx, y0 + hy, x0, y0 + hy);
    cross(v01, v00, x0, y0 + hy, x0, y0);
    if (npts == 2) {
        path += "M " + fmt(pts[0].x) + " " + fmt(pts[0].y) + " L " + fmt(pts[1].x) + " " +
                fmt(pts[1].y) + " ";
    } else if (npts == 4) {
        // saddle: split by the center sign so curves do not cross
        double mid = 0.25 * (v00 + v10 + v01 + v11);
        if ((mid < 0) == (v00 < 0)) {
            path += "M " + fmt(pts[0].x) + " " + fmt(pts[0].y) + " L " + fmt(pts[3].x) + " " +
                    fmt(pts[3].y) + " ";
            path += "M " + fmt(pts[1].x) + " " + fmt(pts[1].y) + " L " + fmt(pts[2].x) + " " +
                    fmt(pts[2].y) + " ";
        } else {
            path += "M " + fmt(pts[0].x) + " " + fmt(pts[0].y) + " L " + fmt(pts[1].x) + " " +
                    fmt(pts[1].y) + " ";
            path += "M " + fmt(pts[2].x) + " " + fmt(pts[2].y) + " L " + fmt(pts[3].x) + " " +
                    fmt(pts[3].y) + " ";
        }
    }
}

std::string render_nodal_svg(const RenderSpec& spec) {
    int res = spec.resolution > 0 ? spec.resolution : 4 * base_resolution(spec.p, spec.q);
    double W = spec.width;
    double scale = W / M_PI;
    std::string svg = svg_open(W, W);

    // two-tone shading from a coarse sign grid
    int shade = std::min(res, 160);
    double hs = M_PI / shade;
    svg += "<g fill=\"#c8c8c8\" stroke=\"none\">\n";
    for (int j = 0; j < shade; ++j)
        for (int i = 0; i < shade; ++i) {
            double v = eval_phi(spec.p, spec.q, spec.theta, (i + 0.5) * hs, (j + 0.5) * hs);
            if (v >= 0) continue;
            svg += "<rect x=\"" + fmt(i * hs * scale) + "\" y=\"" + fmt(j * hs * scale) +
                   "\" width=\"" + fmt(hs * scale + 0.5) + "\" height=\"" +
                   fmt(hs * scale + 0.5) + "\"/>\n";
        }
    svg += "</g>\n";

    double h = M_PI / res;
    std::vector<double> row0(res + 1), row1(res + 1);
    for (int i = 0; i <= res; ++i) row0[i] = eval_phi(spec.p, spec.q, spec.theta, i * h, 0.0);
    std::string path;
    for (int j = 0; j < res; ++j) {
        double y = (j + 1) * h;
        for (int i = 0; i <= res; ++i) row1[i] = eval_phi(spec.p, spec.q, spec.theta, i * h, y);
        for (int i = 0; i < res; ++i)
            cell_segments(i * h * scale, j * h * scale, h * scale, h * scale, row0[i], row0[i + 1],
                          row1[i], row1[i + 1], path);
        std::swap(row0, row1);
    }
    svg += "<path d=\"" + path + "\" stroke=\"#000000\" stroke-width=\"1.2\" fill=\"none\"/>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(W) + "\" height=\"" + fmt(W) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string render_fgraph_svg(const RenderSpec& spec) {
    int p = spec.p, q = spec.q;
    double W = spec.width, H = 0.75 * spec.width;
    double clip = 5.0;
    auto sx = [&](double x) { return x / M_PI * W; };
    auto sy = [&](double v) { return H / 2 - std::clamp(v, -clip, clip) / clip * (H / 2 - 10); };
    std::string svg = svg_open(W, H);
    svg += "<line x1=\"0\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(W) + "\" y2=\"" + fmt(sy(0)) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    int N = 2048;
    std::string path;
    bool open = false;
    double prev = 0;
    for (int i = 1; i < N; ++i) {
        double x = i * M_PI / N;
        double v = f_ratio(p, q, x);
        if (std::isinf(v) || std::abs(v) > 50.0) {
            open = false;
            continue;
        }
        if (open && std::abs(v - prev) > 20.0) open = false;  // jump across a pole
        path += (open ? "L " : "M ") + fmt(sx(x)) + " " + fmt(sy(v)) + " ";
        open = true;
        prev = v;
    }
    svg += "<path d=\"" + path + "\" stroke=\"#1133bb\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    if (q > 0)
        for (int k = 0; k < q; ++k) {
            double x = (2.0 * k + 1.0) * M_PI / (2.0 * q);
            if (common_cosine_zeros(p, q) && std::abs(std::cos(p * x)) < 1e-9) continue;
            svg += "<line x1=\"" + fmt(sx(x)) + "\" y1=\"0\" x2=\"" + fmt(sx(x)) + "\" y2=\"" +
                   fmt(H) + "\" stroke=\"#bb7777\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        }
    for (double r : solve_tangent_equation(p, q)) {
        svg += "<circle cx=\"" + fmt(sx(r)) + "\" cy=\"" + fmt(sy(f_ratio(p, q, r))) +
               "\" r=\"3\" fill=\"#cc2222\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_sweep_svg(const RenderSpec& spec) {
    SweepResult s = sweep_theta(spec.p, spec.q, spec.samples);
    double W = spec.width, H = 0.6 * spec.width;
    int cmax = std::max(s.max_count, 1);
    double L = s.points.empty() ? 1.0 : std::max(s.points.back().theta.value, 1e-9);
    auto sx = [&](double t) { return 20 + t / L * (W - 40); };
    auto sy = [&](int c) { return H - 20 - static_cast<double>(c) / cmax * (H - 40); };
    std::string svg = svg_open(W, H);
    svg += "<line x1=\"20\" y1=\"" + fmt(H - 20) + "\" x2=\"" + fmt(W - 20) + "\" y2=\"" +
           fmt(H - 20) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    std::string path;
    for (size_t i = 0; i < s.points.size(); ++i) {
        path += (i ? "L " : "M ") + fmt(sx(s.points[i].theta.value)) + " " +
                fmt(sy(s.points[i].count)) + " ";
    }
    svg += "<path d=\"" + path + "\" stroke=\"#1133bb\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    for (const auto& pt : s.points)
        if (pt.at_critical)
            svg += "<circle cx=\"" + fmt(sx(pt.theta.value)) + "\" cy=\"" + fmt(sy(pt.count)) +
                   "\" r=\"3\" fill=\"#cc2222\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    switch (spec.kind) {
        case RenderKind::NODAL: return render_nodal_svg(spec);
        case RenderKind::FGRAPH: return render_fgraph_svg(spec);
        case RenderKind::CHESSBOARD: {
            Chessboard b = build_chessboard(spec.p, spec.q);
            return chessboard_svg(b, blue_recolor(b));
        }
        case RenderKind::SWEEP_PROFILE: return render_sweep_svg(spec);
    }
    throw std::invalid_argument("render_svg: unknown kind");
}

std::string render_pgm(const RenderSpec& spec) {
    if (spec.kind != RenderKind::NODAL)
        throw std::invalid_argument("render_pgm: only the sign raster is supported");
    int res = spec.resolution > 0 ? spec.resolution : 512;
    std::string out = "P5\n" + std::to_string(res) + " " + std::to_string(res) + "\n255\n";
    out.reserve(out.size() + static_cast<size_t>(res) * res);
    double h = M_PI / res;
    for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
            double v = eval_phi(spec.p, spec.q, spec.theta, (i + 0.5) * h, (j + 0.5) * h);
            char px = v > 1e-12 ? char(255) : (v < -1e-12 ? char(0) : char(128));
            out += px;
        }
    return out;
}

}  // namespace nodal
