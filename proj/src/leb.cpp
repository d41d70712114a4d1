#include "leb.hpp"

namespace tetleb {

std::pair<SquaredLengths, SquaredLengths> bisect_lengths(const SquaredLengths& s,
                                                         const Labeling& lab) {
    const Rational& lAB = s.at(lab.a(), lab.b());
    const Rational& lAC = s.at(lab.a(), lab.c());
    const Rational& lBC = s.at(lab.b(), lab.c());
    const Rational& lAD = s.at(lab.a(), lab.d());
    const Rational& lBD = s.at(lab.b(), lab.d());
    const Rational& lCD = s.at(lab.c(), lab.d());

    Rational lAM = lAB / 4;
    Rational lMC = (2 * lAC + 2 * lBC - lAB) / 4;
    Rational lMD = (2 * lAD + 2 * lBD - lAB) / 4;

    // left = (A, M, C, D); right = (M, B, C, D); entries (01,02,03,12,13,23)
    SquaredLengths left(std::array<Rational, 6>{lAM, lAC, lAD, lMC, lMD, lCD});
    SquaredLengths right(std::array<Rational, 6>{lAM, lMC, lMD, lBC, lBD, lCD});
    return {std::move(left), std::move(right)};
}

ChildPair phi_children(const ShapeKey& k, TieBreak tb) {
    SquaredLengths s = key_to_lengths(k);
    Labeling lab = scan_labeling(s, tb);
    auto [left, right] = bisect_lengths(s, lab);
    return {normalize(left, tb), normalize(right, tb)};
}

ShapeKey phi_left(const ShapeKey& k, TieBreak tb) {
    return phi_children(k, tb).left;
}

ShapeKey phi_right(const ShapeKey& k, TieBreak tb) {
    return phi_children(k, tb).right;
}

}  // namespace tetleb
