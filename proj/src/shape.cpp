#include "shape.hpp"

#include <algorithm>
#include <cmath>

namespace tetleb {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_index_table[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

}  // namespace

int SquaredLengths::index(int i, int j) {
    return pair_index_table[i][j];
}

Rational SquaredLengths::cayley_menger() const {
    // det of the 5x5 bordered matrix; Gaussian elimination over rationals.
    Rational m[5][5];
    for (int i = 1; i < 5; ++i) {
        m[0][i] = 1;
        m[i][0] = 1;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                m[i + 1][j + 1] = at(i, j);
    Rational det(1);
    for (int c = 0; c < 5; ++c) {
        int piv = -1;
        for (int r = c; r < 5; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return Rational(0);
        if (piv != c) {
            for (int k = c; k < 5; ++k)
                std::swap(m[piv][k], m[c][k]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] * inv;
            for (int k = c; k < 5; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<std::string> SquaredLengths::validate() const {
    std::vector<std::string> out;
    for (int n = 0; n < 6; ++n) {
        if (e_[static_cast<std::size_t>(n)] <= 0) {
            out.push_back("squared length " + std::to_string(kPairs[n][0]) +
                          std::to_string(kPairs[n][1]) + " > 0");
        }
    }
    if (!out.empty())
        return out;
    // each face {i,j,k}: 2(ab+bc+ca) - a^2 - b^2 - c^2 > 0 (16 * area^2)
    for (int skip = 0; skip < 4; ++skip) {
        int f[3], n = 0;
        for (int v = 0; v < 4; ++v)
            if (v != skip)
                f[n++] = v;
        const Rational& a = at(f[0], f[1]);
        const Rational& b = at(f[1], f[2]);
        const Rational& c = at(f[0], f[2]);
        Rational q = 2 * (a * b + b * c + c * a) - a * a - b * b - c * c;
        if (q <= 0)
            out.push_back("triangle inequality on face opposite vertex " + std::to_string(skip));
    }
    if (cayley_menger() <= 0)
        out.push_back("positive squared volume");
    return out;
}

void SquaredLengths::require_valid() const {
    auto v = validate();
    if (!v.empty())
        throw DegenerateInput("degenerate tetrahedron: " + v.front());
}

SquaredLengths SquaredLengths::scaled_primitive() const {
    mpz_class den(1);
    for (const auto& q : e_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::array<mpz_class, 6> ints;
    for (std::size_t n = 0; n < 6; ++n) {
        Rational v = e_[n] * Rational(den);
        ints[n] = v.get_num();  // canonical, so denominator is 1
    }
    mpz_class g(0);
    for (const auto& z : ints)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    SquaredLengths out;
    for (std::size_t n = 0; n < 6; ++n)
        out.e_[n] = Rational(ints[n] / g);
    return out;
}

SquaredLengths SquaredLengths::permuted(const Labeling& lab) const {
    SquaredLengths out;
    for (int n = 0; n < 6; ++n) {
        out.e_[static_cast<std::size_t>(n)] = at(lab.v[static_cast<std::size_t>(kPairs[n][0])],
                                                 lab.v[static_cast<std::size_t>(kPairs[n][1])]);
    }
    return out;
}

std::string ShapeKey::to_string() const {
    return tetleb::to_string(z1) + "," + tetleb::to_string(z2_sq) + "," +
           tetleb::to_string(w1) + "," + tetleb::to_string(w2_z2) + "," +
           tetleb::to_string(t_sq);
}

ShapeKey ShapeKey::from_strings(const std::array<std::string, 5>& f) {
    return {parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2]),
            parse_rational(f[3]), parse_rational(f[4])};
}

SquaredLengths squared_edge_lengths(const VertexSet& v) {
    SquaredLengths s;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            Rational dx = v[static_cast<std::size_t>(i)].x - v[static_cast<std::size_t>(j)].x;
            Rational dy = v[static_cast<std::size_t>(i)].y - v[static_cast<std::size_t>(j)].y;
            Rational dz = v[static_cast<std::size_t>(i)].z - v[static_cast<std::size_t>(j)].z;
            s.at(i, j) = dx * dx + dy * dy + dz * dz;
        }
    }
    s.require_valid();
    return s;
}

std::vector<Labeling> canonical_labelings(const SquaredLengths& s, TieBreak tb) {
    const bool longest = tb == TieBreak::AdjacentLongest;
    Rational mx = s.entries()[0];
    for (const auto& q : s.entries())
        if (q > mx)
            mx = q;

    // stage (i) + per-pair candidates
    struct Cand {
        Labeling lab;
        Rational ac;
    };
    std::vector<Cand> cands;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == b || s.at(a, b) != mx)
                continue;
            int rest[2], n = 0;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b)
                    rest[n++] = v;
            for (int ci = 0; ci < 2; ++ci) {
                int c = rest[ci];
                int d = rest[1 - ci];
                cands.push_back({Labeling{{a, b, c, d}}, s.at(a, c)});
            }
        }
    }
    // stage (ii): extremal |AC|^2 over all candidates
    Rational lim = cands.front().ac;
    for (const auto& c : cands)
        if (longest ? (c.ac > lim) : (c.ac < lim))
            lim = c.ac;
    std::vector<Cand> stage2;
    for (auto& c : cands)
        if (c.ac == lim)
            stage2.push_back(c);
    // stage (iii): survivors share |AB|^2 and |AC|^2. Canonical: smallest
    // angle BAC, i.e. largest AB.AC = (|AB|^2 + |AC|^2 - |BC|^2)/2, i.e.
    // smallest |BC|^2. AdjacentLongest: longest closing edge BC.
    Rational best;
    bool first = true;
    for (const auto& c : stage2) {
        Rational bc = s.at(c.lab.b(), c.lab.c());
        if (first || (longest ? bc > best : bc < best)) {
            best = bc;
            first = false;
        }
    }
    std::vector<Labeling> out;
    for (const auto& c : stage2)
        if (s.at(c.lab.b(), c.lab.c()) == best)
            out.push_back(c.lab);
    std::sort(out.begin(), out.end(),
              [](const Labeling& x, const Labeling& y) { return x.v < y.v; });
    return out;
}

Labeling scan_labeling(const SquaredLengths& s, TieBreak tb) {
    const bool longest = tb == TieBreak::AdjacentLongest;
    Rational mx = s.entries()[0];
    for (const auto& q : s.entries())
        if (q > mx)
            mx = q;
    int ea = -1, eb = -1;
    for (auto& p : kPairs) {
        if (s.at(p[0], p[1]) == mx) {
            ea = p[0];
            eb = p[1];
            break;
        }
    }
    int rest[2], n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != ea && v != eb)
            rest[n++] = v;
    const int adj[4][2] = {{ea, rest[0]}, {ea, rest[1]}, {eb, rest[0]}, {eb, rest[1]}};
    int pick = 0;
    for (int i = 1; i < 4; ++i) {
        const Rational& cur = s.at(adj[i][0], adj[i][1]);
        const Rational& sel = s.at(adj[pick][0], adj[pick][1]);
        if (longest ? cur > sel : cur < sel)
            pick = i;
    }
    int a = adj[pick][0];
    int c = adj[pick][1];
    int b = (a == ea) ? eb : ea;
    int d = (c == rest[0]) ? rest[1] : rest[0];
    return Labeling{{a, b, c, d}};
}

ShapeKey key_from_labeling(const SquaredLengths& s, const Labeling& lab) {
    const Rational& lAB = s.at(lab.a(), lab.b());
    const Rational& lAC = s.at(lab.a(), lab.c());
    const Rational& lBC = s.at(lab.b(), lab.c());
    const Rational& lAD = s.at(lab.a(), lab.d());
    const Rational& lBD = s.at(lab.b(), lab.d());
    const Rational& lCD = s.at(lab.c(), lab.d());

    Rational dot_ac = (lAB + lAC - lBC) / 2;  // AB.AC
    Rational dot_ad = (lAB + lAD - lBD) / 2;  // AB.AD
    Rational dot_cd = (lAC + lAD - lCD) / 2;  // AC.AD

    ShapeKey k;
    k.z1 = dot_ac / lAB;
    k.z2_sq = lAC / lAB - k.z1 * k.z1;
    k.w1 = dot_ad / lAB;
    k.w2_z2 = (dot_cd - dot_ac * dot_ad / lAB) / lAB;
    if (k.z2_sq <= 0)
        throw DegenerateInput("degenerate base face (z2^2 <= 0)");
    k.t_sq = lAD / lAB - k.w1 * k.w1 - k.w2_z2 * k.w2_z2 / k.z2_sq;
    if (k.t_sq <= 0)
        throw DegenerateInput("flat tetrahedron (t^2 <= 0)");
    return k;
}

ShapeKey normalize(const SquaredLengths& s, TieBreak tb) {
    return key_from_labeling(s, scan_labeling(s, tb));
}

std::vector<ShapeKey> labeling_key_variants(const SquaredLengths& s, TieBreak tb) {
    std::vector<ShapeKey> out;
    for (const auto& lab : canonical_labelings(s, tb)) {
        ShapeKey k = key_from_labeling(s, lab);
        if (std::find(out.begin(), out.end(), k) == out.end())
            out.push_back(k);
    }
    return out;
}

ShapeKey normalize_strict(const SquaredLengths& s, TieBreak tb) {
    ShapeKey k = normalize(s, tb);
    ShapeKey m = k.mirrored();
    for (const auto& v : labeling_key_variants(s, tb)) {
        if (!(v == k) && !(v == m)) {
            throw LabelingInconsistency("canonical labelings disagree: " + k.to_string() +
                                        " vs " + v.to_string());
        }
    }
    return k;
}

NormalizedPoint key_to_point(const ShapeKey& k) {
    NormalizedPoint p;
    p.z1 = to_double(k.z1);
    p.z2 = std::sqrt(to_double(k.z2_sq));
    p.w1 = to_double(k.w1);
    p.w2 = (k.w2_z2 == 0) ? 0.0 : to_double(k.w2_z2) / p.z2;
    p.t = std::sqrt(to_double(k.t_sq));
    return p;
}

SquaredLengths key_to_lengths(const ShapeKey& k) {
    Rational w2sq = k.w2_z2 * k.w2_z2 / k.z2_sq;
    SquaredLengths s;
    s.at(0, 1) = 1;
    s.at(0, 2) = k.z1 * k.z1 + k.z2_sq;
    s.at(0, 3) = k.w1 * k.w1 + w2sq + k.t_sq;
    s.at(1, 2) = (k.z1 - 1) * (k.z1 - 1) + k.z2_sq;
    s.at(1, 3) = (k.w1 - 1) * (k.w1 - 1) + w2sq + k.t_sq;
    Rational u = k.w2_z2 / k.z2_sq - 1;
    s.at(2, 3) = (k.w1 - k.z1) * (k.w1 - k.z1) + u * u * k.z2_sq + k.t_sq;
    return s;
}

std::vector<std::string> validate_key(const ShapeKey& k) {
    std::vector<std::string> out;
    if (!(k.z2_sq > 0))
        out.push_back("z2^2 > 0");
    if (!(k.t_sq > 0))
        out.push_back("t^2 > 0");
    if (!(k.z1 > 0))
        out.push_back("z1 > 0");
    if (!(k.z1 <= Rational(1, 2)))
        out.push_back("z1 <= 1/2");
    if (!(k.z2_sq > 0))
        return out;
    if (!((k.z1 - 1) * (k.z1 - 1) + k.z2_sq <= 1))
        out.push_back("|z-1|^2 <= 1");
    Rational zsq = k.z1 * k.z1 + k.z2_sq;
    Rational w2sq = k.w2_z2 * k.w2_z2 / k.z2_sq;
    Rational wt = k.w1 * k.w1 + w2sq + k.t_sq;
    if (!(zsq <= wt))
        out.push_back("|z|^2 <= |w|^2+t^2");
    if (!(wt <= 1))
        out.push_back("|w|^2+t^2 <= 1");
    Rational w1t = (k.w1 - 1) * (k.w1 - 1) + w2sq + k.t_sq;
    if (!(zsq <= w1t))
        out.push_back("|z|^2 <= |w-1|^2+t^2");
    if (!(w1t <= 1))
        out.push_back("|w-1|^2+t^2 <= 1");
    Rational u = k.w2_z2 / k.z2_sq - 1;
    Rational wz = (k.w1 - k.z1) * (k.w1 - k.z1) + u * u * k.z2_sq + k.t_sq;
    if (!(wz <= 1))
        out.push_back("|w-z|^2+t^2 <= 1");
    return out;
}

}  // namespace tetleb
