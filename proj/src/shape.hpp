#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace tetleb {

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by normalize_strict when two canonical labelings of the same input
// produce keys that are not related by the base-edge mirror symmetry.
struct LabelingInconsistency : std::runtime_error {
    explicit LabelingInconsistency(const std::string& what) : std::runtime_error(what) {}
};

struct Vec3 {
    Rational x, y, z;
};

using VertexSet = std::array<Vec3, 4>;

// Vertex labeling (A, B, C, D) as indices into 0..3. AB is the edge to
// bisect, ABC the base face.
struct Labeling {
    std::array<int, 4> v{0, 1, 2, 3};
    int a() const { return v[0]; }
    int b() const { return v[1]; }
    int c() const { return v[2]; }
    int d() const { return v[3]; }
    bool operator==(const Labeling& o) const { return v == o.v; }
};

// Squared edge lengths of a labeled tetrahedron, indexed by unordered vertex
// pairs in the fixed order (01, 02, 03, 12, 13, 23).
class SquaredLengths {
public:
    SquaredLengths() = default;
    explicit SquaredLengths(std::array<Rational, 6> e) : e_(std::move(e)) {}

    static int index(int i, int j);

    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(index(i, j))]; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(index(i, j))]; }
    const std::array<Rational, 6>& entries() const { return e_; }
    std::array<Rational, 6>& entries() { return e_; }

    // 288 * V^2 as an exact rational (Cayley-Menger determinant).
    Rational cayley_menger() const;

    // Violated validity constraints, empty when the tetrahedron is
    // non-degenerate: positive entries, strict triangle inequalities on all
    // four faces (in the squared polynomial form), positive squared volume.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
    void require_valid() const;

    // Same similarity class, scaled so entries are coprime integers.
    SquaredLengths scaled_primitive() const;

    // Lengths re-indexed so vertex lab.v[i] becomes vertex i.
    SquaredLengths permuted(const Labeling& lab) const;

    bool operator==(const SquaredLengths& o) const { return e_ == o.e_; }

private:
    std::array<Rational, 6> e_{};
};

// Exact identifier of a similarity class: the componentwise square form
// (z1, z2^2, w1, w2*z2, t^2) of the canonical-space point (z, (w, t)).
struct ShapeKey {
    Rational z1, z2_sq, w1, w2_z2, t_sq;

    bool operator==(const ShapeKey& o) const {
        return z1 == o.z1 && z2_sq == o.z2_sq && w1 == o.w1 && w2_z2 == o.w2_z2 &&
               t_sq == o.t_sq;
    }

    // Image under the reflection through the plane x = 1/2 of the canonical
    // frame; a distinct valid key only when z1 == 1/2.
    ShapeKey mirrored() const { return {z1, z2_sq, Rational(1) - w1, w2_z2, t_sq}; }

    std::string to_string() const;
    static ShapeKey from_strings(const std::array<std::string, 5>& f);
};

struct ShapeKeyHash {
    std::size_t operator()(const ShapeKey& k) const {
        std::size_t h = hash_value(k.z1);
        auto mix = [&h](const Rational& q) {
            h ^= hash_value(q) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(k.z2_sq);
        mix(k.w1);
        mix(k.w2_z2);
        mix(k.t_sq);
        return h;
    }
};

// Floating-point view of a key, for metric evaluation and plotting.
struct NormalizedPoint {
    double z1 = 0, z2 = 0, w1 = 0, w2 = 0, t = 0;
};

// Base-face selection strategy. Canonical is the procedure used throughout;
// AdjacentLongest is the exploratory alternative (longest adjacent edge,
// ties by the longest closing edge) and reproduces no published numbers.
enum class TieBreak { Canonical, AdjacentLongest };

SquaredLengths squared_edge_lengths(const VertexSet& v);

// All labelings surviving the three-stage tie-break:
//   (i)  {A,B} spans a maximal squared length (both orientations),
//   (ii) AC has the minimal squared length among the adjacent edges of all
//        surviving pairs (so survivors share |AB|^2 and |AC|^2),
//   (iii) smallest angle BAC, compared exactly via the dot product
//        AB.AC = (|AB|^2 + |AC|^2 - |BC|^2) / 2.
// Returned in lexicographic order of (A,B,C,D).
std::vector<Labeling> canonical_labelings(const SquaredLengths& s,
                                          TieBreak tb = TieBreak::Canonical);

// The deterministic labeling used by normalize and the refinement maps:
// first maximal edge in the fixed scan order (01, 02, 03, 12, 13, 23), then
// the first minimal adjacent edge in the order (A,x), (A,y), (B,x), (B,y)
// where x < y are the remaining vertices. Residual ties (which the selection
// leaves unresolved) are thereby settled by the input vertex order.
Labeling scan_labeling(const SquaredLengths& s, TieBreak tb = TieBreak::Canonical);

ShapeKey key_from_labeling(const SquaredLengths& s, const Labeling& lab);

// Normalization: the key of the scan labeling. Total on valid inputs;
// deterministic in the input vertex order.
ShapeKey normalize(const SquaredLengths& s, TieBreak tb = TieBreak::Canonical);

// All distinct keys across canonical labelings. A singleton on most inputs;
// shapes with an isosceles base (z1 = 1/2) and an off-plane apex yield a
// mirror pair, which is the documented gap in the arbitrary-choice claim.
std::vector<ShapeKey> labeling_key_variants(const SquaredLengths& s,
                                            TieBreak tb = TieBreak::Canonical);

// Like normalize, but raises LabelingInconsistency whenever canonical
// labelings disagree beyond the mirror pair.
ShapeKey normalize_strict(const SquaredLengths& s, TieBreak tb = TieBreak::Canonical);

NormalizedPoint key_to_point(const ShapeKey& k);

// Exact inverse embedding A=(0,0,0), B=(1,0,0), C=(z1,z2,0), D=(w1,w2,t).
SquaredLengths key_to_lengths(const ShapeKey& k);

// Violated canonical-space constraints; empty iff the key lies in the
// canonical space.
std::vector<std::string> validate_key(const ShapeKey& k);

}  // namespace tetleb
