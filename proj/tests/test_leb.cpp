#include <doctest.h>

#include "leb.hpp"
#include "oracle.hpp"
#include "reference_data.hpp"

using namespace tetleb;

namespace {

ShapeKey ref(const refdata::RefKey& r) {
    return ShapeKey::from_strings(r);
}

// canonical representative up to the base-edge mirror
ShapeKey mirror_min(const ShapeKey& k) {
    ShapeKey m = k.mirrored();
    return m.w1 < k.w1 ? m : k;
}

}  // namespace

TEST_CASE("midpoint edge length is a quarter of the parent edge") {
    oracle::Rng rng;
    int done = 0;
    while (done < 50) {
        VertexSet v = oracle::random_vertices(rng);
        SquaredLengths s;
        try {
            s = squared_edge_lengths(v);
        } catch (const DegenerateInput&) {
            continue;
        }
        ++done;
        Labeling lab = scan_labeling(s);
        auto [left, right] = bisect_lengths(s, lab);
        CHECK(left.at(0, 1) == s.at(lab.a(), lab.b()) / 4);
        CHECK(right.at(0, 1) == s.at(lab.a(), lab.b()) / 4);
    }
}

TEST_CASE("both Sommerville children normalize to the halves shape") {
    SquaredLengths som(std::array<Rational, 6>{Rational(4), Rational(3), Rational(3),
                                               Rational(3), Rational(3), Rational(4)});
    for (const auto& lab : canonical_labelings(som)) {
        auto [left, right] = bisect_lengths(som, lab);
        CHECK(normalize(left) == ref(refdata::k_halves));
        CHECK(normalize(right) == ref(refdata::k_halves));
        // children lengths are {1,3,3,2,2,4} up to relabeling and scale
        auto le = left.scaled_primitive().entries();
        std::sort(le.begin(), le.end());
        CHECK(le == std::array<Rational, 6>{1, 2, 2, 3, 3, 4});
    }
}

TEST_CASE("bisection agrees with the coordinate-split oracle") {
    oracle::Rng rng;
    int done = 0;
    while (done < 100) {
        VertexSet v = oracle::random_vertices(rng);
        SquaredLengths s;
        try {
            s = squared_edge_lengths(v);
        } catch (const DegenerateInput&) {
            continue;
        }
        ++done;
        Labeling lab = scan_labeling(s);
        auto [left, right] = bisect_lengths(s, lab);

        oracle::Verts fv;
        for (int i = 0; i < 4; ++i)
            fv[static_cast<std::size_t>(i)] = {
                to_double(v[static_cast<std::size_t>(i)].x),
                to_double(v[static_cast<std::size_t>(i)].y),
                to_double(v[static_cast<std::size_t>(i)].z)};
        auto [lf, rf] = oracle::bisect_f(fv, {lab.a(), lab.b(), lab.c(), lab.d()});
        static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int n = 0; n < 6; ++n) {
            double want_l = oracle::d2(lf[pairs[n][0]], lf[pairs[n][1]]);
            double want_r = oracle::d2(rf[pairs[n][0]], rf[pairs[n][1]]);
            CHECK(to_double(left.entries()[static_cast<std::size_t>(n)]) ==
                  doctest::Approx(want_l).epsilon(1e-12));
            CHECK(to_double(right.entries()[static_cast<std::size_t>(n)]) ==
                  doctest::Approx(want_r).epsilon(1e-12));
        }
    }
}

TEST_CASE("refinement maps on the Sommerville cycle") {
    ShapeKey s = ref(refdata::k_sommerville);
    ShapeKey h = ref(refdata::k_halves);
    ShapeKey p = ref(refdata::k_path);
    ShapeKey q = ref(refdata::k_path_image);

    CHECK(phi_left(s) == h);
    CHECK(phi_right(s) == h);
    CHECK(phi_left(h) == p);
    CHECK(phi_left(p) == q);
    CHECK(phi_left(q) == h);
}

TEST_CASE("the seven-step route from the regular to the cube corner shape") {
    const char* word = "LRLRLLL";
    ShapeKey cur = ref(refdata::k_regular);
    for (std::size_t i = 0; i < 7; ++i) {
        cur = word[i] == 'L' ? phi_left(cur) : phi_right(cur);
        CHECK(cur == ref(refdata::chain_to_cube_corner[i]));
    }
    CHECK(cur == ref(refdata::k_cube_corner));
}

TEST_CASE("children volume is exactly a quarter of the parent's") {
    oracle::Rng rng;
    int done = 0;
    while (done < 100) {
        VertexSet v = oracle::random_vertices(rng);
        SquaredLengths s;
        try {
            s = squared_edge_lengths(v);
        } catch (const DegenerateInput&) {
            continue;
        }
        ++done;
        Labeling lab = scan_labeling(s);
        auto [left, right] = bisect_lengths(s, lab);
        Rational cm = s.cayley_menger();
        CHECK(left.cayley_menger() == cm / 4);
        CHECK(right.cayley_menger() == cm / 4);
    }
}

TEST_CASE("child pairs agree across canonical labelings up to the mirror gap") {
    for (const auto& r : {refdata::k_sommerville, refdata::k_halves, refdata::k_regular,
                          refdata::k_cube_corner, refdata::k_path}) {
        ShapeKey k = ref(r);
        SquaredLengths s = key_to_lengths(k);
        ChildPair base = phi_children(k);
        auto canon = [](const ChildPair& cp) {
            ShapeKey a = mirror_min(cp.left);
            ShapeKey b = mirror_min(cp.right);
            if (b.to_string() < a.to_string())
                std::swap(a, b);
            return a.to_string() + "|" + b.to_string();
        };
        std::string want = canon(base);
        for (const auto& lab : canonical_labelings(s)) {
            auto [bl, br] = bisect_lengths(s, lab);
            CHECK(canon(ChildPair{normalize(bl), normalize(br)}) == want);
        }
    }
}
