#pragma once

// Test-only oracles, independent of the library's exact-arithmetic path:
// a double-precision coordinate implementation of the normalization steps
// and a brute-force labeling filter.

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "shape.hpp"

namespace oracle {

using P3 = std::array<double, 3>;
using Verts = std::array<P3, 4>;

inline double d2(const P3& a, const P3& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

// the deterministic scan on double lengths: first maximal edge in
// (01,02,03,12,13,23) order, then first minimal adjacent in A-side-first order
inline std::array<int, 4> scan_labeling_f(const Verts& v) {
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    double len[4][4];
    double mx = -1;
    for (auto& p : pairs) {
        double d = d2(v[p[0]], v[p[1]]);
        len[p[0]][p[1]] = len[p[1]][p[0]] = d;
        if (d > mx)
            mx = d;
    }
    int ea = -1, eb = -1;
    for (auto& p : pairs) {
        if (len[p[0]][p[1]] == mx) {
            ea = p[0];
            eb = p[1];
            break;
        }
    }
    int rest[2], n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != ea && i != eb)
            rest[n++] = i;
    const int adj[4][2] = {{ea, rest[0]}, {ea, rest[1]}, {eb, rest[0]}, {eb, rest[1]}};
    int pick = 0;
    for (int i = 1; i < 4; ++i)
        if (len[adj[i][0]][adj[i][1]] < len[adj[pick][0]][adj[pick][1]])
            pick = i;
    int a = adj[pick][0], c = adj[pick][1];
    int b = (a == ea) ? eb : ea;
    int d = (c == rest[0]) ? rest[1] : rest[0];
    return {a, b, c, d};
}

// Coordinate implementation of the normalization: translate A to the origin,
// rotate the base into the xy-plane with B on the x-axis and C above it,
// scale AB to 1, reflect D into the upper half-space.
inline tetleb::NormalizedPoint normalize_f(const Verts& v) {
    auto lab = scan_labeling_f(v);
    P3 A = v[static_cast<std::size_t>(lab[0])];
    P3 B = v[static_cast<std::size_t>(lab[1])];
    P3 C = v[static_cast<std::size_t>(lab[2])];
    P3 D = v[static_cast<std::size_t>(lab[3])];
    auto sub = [](const P3& x, const P3& y) {
        return P3{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    };
    auto dot = [](const P3& x, const P3& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    P3 b = sub(B, A), c = sub(C, A), d = sub(D, A);
    double nb = std::sqrt(dot(b, b));
    P3 e1{b[0] / nb, b[1] / nb, b[2] / nb};
    double ce1 = dot(c, e1);
    P3 v2{c[0] - ce1 * e1[0], c[1] - ce1 * e1[1], c[2] - ce1 * e1[2]};
    double nv2 = std::sqrt(dot(v2, v2));
    P3 e2{v2[0] / nv2, v2[1] / nv2, v2[2] / nv2};
    P3 e3{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
          e1[0] * e2[1] - e1[1] * e2[0]};
    tetleb::NormalizedPoint p;
    p.z1 = dot(c, e1) / nb;
    p.z2 = dot(c, e2) / nb;
    p.w1 = dot(d, e1) / nb;
    p.w2 = dot(d, e2) / nb;
    p.t = std::fabs(dot(d, e3)) / nb;
    return p;
}

// midpoint split of edge AB in coordinates; returns (left, right) vertex sets
inline std::pair<Verts, Verts> bisect_f(const Verts& v, const std::array<int, 4>& lab) {
    P3 A = v[static_cast<std::size_t>(lab[0])];
    P3 B = v[static_cast<std::size_t>(lab[1])];
    P3 C = v[static_cast<std::size_t>(lab[2])];
    P3 D = v[static_cast<std::size_t>(lab[3])];
    P3 M{(A[0] + B[0]) / 2, (A[1] + B[1]) / 2, (A[2] + B[2]) / 2};
    return {Verts{A, M, C, D}, Verts{M, B, C, D}};
}

// brute-force canonical-labeling filter: all 24 permutations, the documented
// three stages applied literally
inline std::vector<tetleb::Labeling> filter_labelings(const tetleb::SquaredLengths& s) {
    using tetleb::Rational;
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<tetleb::Labeling> all;
    std::sort(p.begin(), p.end());
    Rational mx = s.entries()[0];
    for (const auto& q : s.entries())
        if (q > mx)
            mx = q;
    do {
        if (s.at(p[0], p[1]) != mx)
            continue;
        Rational m = s.at(p[0], p[2]);
        bool minimal = true;
        for (int x : {p[2], p[3]})
            for (int e : {p[0], p[1]})
                if (s.at(e, x) < m)
                    minimal = false;
        if (minimal)
            all.push_back(tetleb::Labeling{{p[0], p[1], p[2], p[3]}});
    } while (std::next_permutation(p.begin(), p.end()));
    // global stage (ii)
    Rational g = s.at(all.front().a(), all.front().c());
    for (const auto& lab : all)
        if (s.at(lab.a(), lab.c()) < g)
            g = s.at(lab.a(), lab.c());
    std::vector<tetleb::Labeling> stage2;
    for (const auto& lab : all)
        if (s.at(lab.a(), lab.c()) == g)
            stage2.push_back(lab);
    // stage (iii): max dot <=> min |BC|^2
    Rational best = s.at(stage2.front().b(), stage2.front().c());
    for (const auto& lab : stage2)
        if (s.at(lab.b(), lab.c()) < best)
            best = s.at(lab.b(), lab.c());
    std::vector<tetleb::Labeling> out;
    for (const auto& lab : stage2)
        if (s.at(lab.b(), lab.c()) == best)
            out.push_back(lab);
    return out;
}

// deterministic small PRNG for reproducible property tests
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline tetleb::VertexSet random_vertices(Rng& rng) {
    tetleb::VertexSet v;
    for (auto& p : v) {
        p.x = tetleb::Rational(rng.range(-6, 6), rng.range(1, 4));
        p.y = tetleb::Rational(rng.range(-6, 6), rng.range(1, 4));
        p.z = tetleb::Rational(rng.range(-6, 6), rng.range(1, 4));
    }
    return v;
}

}  // namespace oracle
