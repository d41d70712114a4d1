#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "leb.hpp"
#include "shape.hpp"

namespace tetleb {

// Node-identity scheme for the orbit search. Exact compares keys as exact
// rationals; Rounded compares the decimal expansion of each normalized-point
// component, rounded half-even to `digits` places.
struct DedupMode {
    enum class Kind { Exact, Rounded };
    Kind kind = Kind::Exact;
    int digits = 10;

    static DedupMode exact() { return {}; }
    static DedupMode rounded(int digits = 10) { return {Kind::Rounded, digits}; }
    // "exact", "rounded", "rounded:12"
    static DedupMode parse(const std::string& text);
    std::string to_string() const;
};

// Decimal identity string used by Rounded dedup: the five components of the
// normalized point evaluated at 256-bit precision and rounded half-even.
std::string rounded_identity(const ShapeKey& k, int digits);

struct OrbitGraph {
    struct Edge {
        std::uint32_t src;
        std::uint32_t dst;
        char label;  // 'L' or 'R'
    };

    std::vector<ShapeKey> nodes;          // insertion order
    std::vector<SquaredLengths> lengths;  // canonical-order primitive integers
    std::vector<Edge> edges;              // (parent order, L before R)
    std::vector<std::vector<std::uint32_t>> frontiers;  // new nodes per iteration
    bool closed = false;

    std::optional<std::uint32_t> find(const ShapeKey& k) const;
};

struct ExploreOptions {
    int max_iter = 40;
    DedupMode mode;
    unsigned threads = 0;  // 0 = hardware concurrency
    TieBreak tie_break = TieBreak::Canonical;
    std::size_t node_cap = std::numeric_limits<std::size_t>::max();
};

// Breadth-first orbit enumeration: frontier n+1 holds the unseen children of
// frontier n, until a frontier comes up empty (closed) or max_iter expansion
// rounds have run. Output is deterministic and independent of `threads`.
OrbitGraph explore(const ShapeKey& root, const ExploreOptions& opts = {});

// Node count when closed, nullopt when the iteration budget ran out first.
std::optional<std::size_t> orbit_length(const OrbitGraph& g);

// New shapes per iteration; sums to the node count.
std::vector<std::size_t> frontier_counts(const OrbitGraph& g);

// Shortest L/R word from one node to another, ties resolved L before R.
// nullopt when unreachable; empty string when from == to.
std::optional<std::string> find_word(const OrbitGraph& g, const ShapeKey& from,
                                     const ShapeKey& to);

// Strongly connected components that contain a cycle (size > 1, or a
// self-loop), each sorted by node id, listed by smallest member.
std::vector<std::vector<std::uint32_t>> cycle_components(const OrbitGraph& g);

enum class SweepStatus { Closed, Open, Invalid };

struct SweepRow {
    Rational alpha;
    SweepStatus status = SweepStatus::Invalid;
    std::size_t length = 0;
};

// One explore per alpha. Family values failing validate_key (or throwing)
// are flagged Invalid rather than aborting the sweep.
std::vector<SweepRow> sweep(const std::function<ShapeKey(const Rational&)>& family,
                            const std::vector<Rational>& alphas,
                            const ExploreOptions& opts = {});

}  // namespace tetleb
