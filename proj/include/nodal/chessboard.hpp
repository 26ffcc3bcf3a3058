#pragma once

#include <string>
#include <vector>

#include "nodal/rational.hpp"

namespace nodal {

struct CutLine {
    Rational pos;     // position divided by pi, in (0, 1)
    int lattice = 0;  // which cosine factor vanishes here (its frequency)
};

// sign chessboard of the product cos(px)cos(qy) (or the swapped product):
// cuts at odd multiples of pi/2p and pi/2q on each axis
struct Chessboard {
    int p = 0;
    int q = 0;
    bool swapped = false;
    std::vector<CutLine> x_cuts;
    std::vector<CutLine> y_cuts;
    int nx = 0;  // cells per row
    int ny = 0;

    // cell colour is determined combinatorially: colours alternate across
    // every cut; the origin cell is white (all four cosine factors positive)
    // unless the colouring is swapped to track the opposite sign convention
    bool white(int i, int j) const { return (((i + j) & 1) == 0) != swapped; }
};

struct Corner {
    int i = 0;  // x-cut index
    int j = 0;  // y-cut index
    bool admissible = false;  // both cuts from the same cosine lattice
};

Chessboard build_chessboard(int p, int q, bool swap_roles = false);

// interior cut intersections; a corner is admissible when the two families
// crossing there belong to the same lattice, so the zero curves may cross
std::vector<Corner> admissible_corners(const Chessboard& b);

struct BlueMask {
    std::vector<std::vector<bool>> blue;  // [j][i], true = recoloured white cell
    Rational area_fraction{0, 1};          // total blue area / pi^2
};

// marks white cells that a nodal line through white territory can reach from
// the boundary: seeds are whites touching a boundary edge, growth passes to
// the diagonal white neighbour across a forbidden corner
BlueMask blue_recolor(const Chessboard& b);

// 1 - blue fraction: an upper bound on the area fraction available to a
// nodal domain that avoids the boundary
Rational inner_area_upper(int p, int q);

std::string chessboard_svg(const Chessboard& b, const BlueMask& m);
std::string chessboard_json(const Chessboard& b, const BlueMask& m);

}  // namespace nodal
