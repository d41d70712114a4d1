#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shape.hpp"

namespace tetleb {

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPerturbation : std::runtime_error {
    explicit InvalidPerturbation(const std::string& what) : std::runtime_error(what) {}
};

// A named tetrahedron with its exact similarity-class key. Sources with
// irrational vertex coordinates are stored as exact squared lengths derived
// ahead of time; nothing in the engine touches radicals.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::optional<VertexSet> vertices;      // rational coordinates when available
    std::optional<SquaredLengths> lengths;  // always set
    ShapeKey key;
};

const std::vector<CatalogEntry>& catalog();

// Case-insensitive lookup; UnknownName carries close-match suggestions.
const CatalogEntry& catalog_get(const std::string& name);

// Single-component perturbation families of the all-halves shape
// (1/2, 1/4, 1/2, 1/4, 1/4). Components: z1 (1/2 - a), z2 (1/2 + a),
// w1 (1/2 - a), w2 (1/2 + a), t (1/2 + a).
ShapeKey perturbation_family(const std::string& component, const Rational& alpha);

// The family generator as a callable, for sweeps.
std::function<ShapeKey(const Rational&)> perturbation_family_fn(const std::string& component);

const std::vector<std::string>& perturbation_components();

}  // namespace tetleb
