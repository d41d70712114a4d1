#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "orbit.hpp"
#include "shape.hpp"

namespace tetleb {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyCluster : std::runtime_error {
    EmptyCluster() : std::runtime_error("empty cluster") {}
};

// Half-plane distance: cosh d = 1 + |a-b|^2 / (2 Im(a) Im(b)).
double h2_distance(double ax, double ay, double bx, double by);

// Half-space distance: cosh d = (|wa-wb|^2 + ta^2 + tb^2) / (2 ta tb).
double h3_distance(double wax, double way, double ta, double wbx, double wby, double tb);

// Product metric: sqrt(d_H2^2 + d_H3^2).
double product_distance(const NormalizedPoint& a, const NormalizedPoint& b);
double product_distance(const ShapeKey& a, const ShapeKey& b);

double cluster_mean_distance(std::span<const ShapeKey> cluster, const ShapeKey& ref);

struct QualityReport {
    double min_dihedral_deg = 0;
    double min_face_deg = 0;
    double norm_volume_pct = 0;  // percent of the unit regular tetrahedron volume
};

QualityReport quality(const NormalizedPoint& p);
QualityReport quality(const ShapeKey& k);

struct QualitySeriesRow {
    std::size_t iter = 0;
    std::size_t new_shapes = 0;
    double min_dihedral_deg = 0;
    double min_face_deg = 0;
    double min_norm_vol_pct = 0;
};

// Per-iteration minima over the new shapes of each frontier. Frontiers with
// no new shapes get NaN metric entries.
std::vector<QualitySeriesRow> orbit_quality_series(const OrbitGraph& g);

// Minima over all nodes of the graph.
QualityReport quality_extrema(const OrbitGraph& g);

}  // namespace tetleb
