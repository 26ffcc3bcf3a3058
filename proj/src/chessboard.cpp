#include "nodal/chessboard.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "nodal/levels.hpp"

namespace nodal {

Chessboard build_chessboard(int p, int q, bool swap_roles) {
    if (q < 1 || p <= q)
        throw std::domain_error("build_chessboard: needs p > q >= 1");
    if (common_cosine_zeros(p, q))
        throw std::domain_error("build_chessboard: cut lattices collide on shared cosine zeros");
    Chessboard b;
    b.p = p;
    b.q = q;
    b.swapped = swap_roles;
    std::vector<CutLine> cuts;
    for (int k = 0; k < p; ++k) cuts.push_back({Rational(2 * k + 1, 2 * p), p});
    for (int k = 0; k < q; ++k) cuts.push_back({Rational(2 * k + 1, 2 * q), q});
    std::sort(cuts.begin(), cuts.end(),
              [](const CutLine& a, const CutLine& c) { return a.pos < c.pos; });
    b.x_cuts = cuts;
    b.y_cuts = std::move(cuts);
    b.nx = static_cast<int>(b.x_cuts.size()) + 1;
    b.ny = b.nx;
    return b;
}

std::vector<Corner> admissible_corners(const Chessboard& b) {
    std::vector<Corner> out;
    for (int i = 0; i < static_cast<int>(b.x_cuts.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.y_cuts.size()); ++j)
            out.push_back({i, j, b.x_cuts[i].lattice == b.y_cuts[j].lattice});
    return out;
}

BlueMask blue_recolor(const Chessboard& b) {
    int nx = b.nx, ny = b.ny;
    std::vector<std::vector<bool>> blue(ny, std::vector<bool>(nx, false));
    std::vector<std::pair<int, int>> stack;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (b.white(i, j) && (i == 0 || i == nx - 1 || j == 0 || j == ny - 1)) {
                blue[j][i] = true;
                stack.push_back({i, j});
            }
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (int di : {-1, 1})
            for (int dj : {-1, 1}) {
                int ni = i + di, nj = j + dj;
                if (ni < 0 || nj < 0 || ni >= nx || nj >= ny || blue[nj][ni]) continue;
                // growth passes only where the zero set cannot cross: a
                // corner whose two cut lines come from different lattices
                int ci = di == 1 ? i : i - 1;
                int cj = dj == 1 ? j : j - 1;
                if (b.x_cuts[ci].lattice == b.y_cuts[cj].lattice) continue;
                blue[nj][ni] = true;
                stack.push_back({ni, nj});
            }
    }
    auto widths = [](const std::vector<CutLine>& cuts) {
        std::vector<Rational> w;
        Rational prev(0);
        for (const auto& c : cuts) {
            w.push_back(c.pos - prev);
            prev = c.pos;
        }
        w.push_back(Rational(1) - prev);
        return w;
    };
    std::vector<Rational> wx = widths(b.x_cuts), wy = widths(b.y_cuts);
    Rational area(0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (blue[j][i]) area += wx[i] * wy[j];
    return {std::move(blue), area};
}

Rational inner_area_upper(int p, int q) {
    Chessboard b = build_chessboard(p, q);
    return Rational(1) - blue_recolor(b).area_fraction;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string chessboard_svg(const Chessboard& b, const BlueMask& m) {
    const double W = 600.0, margin = 20.0;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W + 2 * margin) +
           "\" height=\"" + fmt(W + 2 * margin) + "\" viewBox=\"0 0 " + fmt(W + 2 * margin) +
           " " + fmt(W + 2 * margin) + "\">\n";
    auto edges = [&](const std::vector<CutLine>& cuts) {
        std::vector<double> e{0.0};
        for (const auto& c : cuts) e.push_back(to_double(c.pos));
        e.push_back(1.0);
        return e;
    };
    std::vector<double> ex = edges(b.x_cuts), ey = edges(b.y_cuts);
    for (int j = 0; j < b.ny; ++j)
        for (int i = 0; i < b.nx; ++i) {
            const char* fill = m.blue[j][i] ? "#7aa8ff" : (b.white(i, j) ? "#ffffff" : "#303030");
            svg += "<rect x=\"" + fmt(margin + ex[i] * W) + "\" y=\"" + fmt(margin + ey[j] * W) +
                   "\" width=\"" + fmt((ex[i + 1] - ex[i]) * W) + "\" height=\"" +
                   fmt((ey[j + 1] - ey[j]) * W) + "\" fill=\"" + fill +
                   "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
        }
    for (const auto& c : admissible_corners(b)) {
        double cx = margin + to_double(b.x_cuts[c.i].pos) * W;
        double cy = margin + to_double(b.y_cuts[c.j].pos) * W;
        if (c.admissible) {
            svg += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                   "\" r=\"3.5\" fill=\"#cc2222\"/>\n";
        } else {
            svg += "<path d=\"M " + fmt(cx - 3) + " " + fmt(cy - 3) + " L " + fmt(cx + 3) + " " +
                   fmt(cy + 3) + " M " + fmt(cx - 3) + " " + fmt(cy + 3) + " L " + fmt(cx + 3) +
                   " " + fmt(cy - 3) + "\" stroke=\"#2222cc\" stroke-width=\"1.5\"/>\n";
        }
    }
    svg += "<rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" + fmt(W) +
           "\" height=\"" + fmt(W) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string chessboard_json(const Chessboard& b, const BlueMask& m) {
    Rational inner = Rational(1) - m.area_fraction;
    std::string s = "{\"p\":" + std::to_string(b.p) + ",\"q\":" + std::to_string(b.q) +
                    ",\"blueFraction\":[" + std::to_string(m.area_fraction.numerator()) + "," +
                    std::to_string(m.area_fraction.denominator()) + "],\"innerUpper\":[" +
                    std::to_string(inner.numerator()) + "," + std::to_string(inner.denominator()) +
                    "]}";
    return s;
}

}  // namespace nodal
