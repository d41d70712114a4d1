#pragma once

#include <utility>

#include "shape.hpp"

namespace tetleb {

struct ChildPair {
    ShapeKey left, right;
};

// Longest-edge bisection on squared lengths via the median identity:
// with M the midpoint of AB,
//   |AM|^2 = |AB|^2 / 4,
//   |MC|^2 = (2|AC|^2 + 2|BC|^2 - |AB|^2) / 4,
//   |MD|^2 = (2|AD|^2 + 2|BD|^2 - |AB|^2) / 4.
// Children inherit the vertex orders (A, M, C, D) and (M, B, C, D).
std::pair<SquaredLengths, SquaredLengths> bisect_lengths(const SquaredLengths& s,
                                                         const Labeling& lab);

// Both refinement maps of one parent. The parent is embedded in its
// canonical vertex order, bisected along the scan labeling, and each child
// normalized.
ChildPair phi_children(const ShapeKey& k, TieBreak tb = TieBreak::Canonical);

ShapeKey phi_left(const ShapeKey& k, TieBreak tb = TieBreak::Canonical);
ShapeKey phi_right(const ShapeKey& k, TieBreak tb = TieBreak::Canonical);

}  // namespace tetleb
