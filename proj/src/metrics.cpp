#include "metrics.hpp"

#include <cmath>
#include <limits>

namespace tetleb {

namespace {

double acosh_clamped(double x) {
    // absorbs rounding just below 1 at coincident points
    if (x < 1.0)
        x = 1.0;
    return std::log(x + std::sqrt(x * x - 1.0));
}

struct P3 {
    double x, y, z;
};

P3 operator-(const P3& a, const P3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double dot(const P3& a, const P3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const P3& a) {
    return std::sqrt(dot(a, a));
}

double angle_deg(const P3& u, const P3& v) {
    double c = dot(u, v) / (norm(u) * norm(v));
    if (c > 1.0)
        c = 1.0;
    if (c < -1.0)
        c = -1.0;
    return std::acos(c) * 180.0 / M_PI;
}

constexpr double kRegularUnitVolume = 0.11785113019775793;  // sqrt(2)/12

}  // namespace

double h2_distance(double ax, double ay, double bx, double by) {
    if (!(ay > 0) || !(by > 0))
        throw DomainError("half-plane point needs positive imaginary part");
    double dx = ax - bx, dy = ay - by;
    return acosh_clamped(1.0 + (dx * dx + dy * dy) / (2.0 * ay * by));
}

double h3_distance(double wax, double way, double ta, double wbx, double wby, double tb) {
    if (!(ta > 0) || !(tb > 0))
        throw DomainError("half-space point needs positive height");
    double dx = wax - wbx, dy = way - wby;
    return acosh_clamped((dx * dx + dy * dy + ta * ta + tb * tb) / (2.0 * ta * tb));
}

double product_distance(const NormalizedPoint& a, const NormalizedPoint& b) {
    double d2 = h2_distance(a.z1, a.z2, b.z1, b.z2);
    double d3 = h3_distance(a.w1, a.w2, a.t, b.w1, b.w2, b.t);
    return std::sqrt(d2 * d2 + d3 * d3);
}

double product_distance(const ShapeKey& a, const ShapeKey& b) {
    return product_distance(key_to_point(a), key_to_point(b));
}

double cluster_mean_distance(std::span<const ShapeKey> cluster, const ShapeKey& ref) {
    if (cluster.empty())
        throw EmptyCluster();
    NormalizedPoint r = key_to_point(ref);
    double sum = 0;
    for (const auto& k : cluster)
        sum += product_distance(key_to_point(k), r);
    return sum / static_cast<double>(cluster.size());
}

QualityReport quality(const NormalizedPoint& p) {
    const P3 v[4] = {{0, 0, 0}, {1, 0, 0}, {p.z1, p.z2, 0}, {p.w1, p.w2, p.t}};

    QualityReport rep;
    rep.min_face_deg = std::numeric_limits<double>::infinity();
    rep.min_dihedral_deg = std::numeric_limits<double>::infinity();

    // 12 face angles: each face (i,j,k), angle at each vertex
    for (int skip = 0; skip < 4; ++skip) {
        int f[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip)
                f[n++] = i;
        for (int a = 0; a < 3; ++a) {
            const P3& at = v[f[a]];
            const P3& b = v[f[(a + 1) % 3]];
            const P3& c = v[f[(a + 2) % 3]];
            rep.min_face_deg = std::min(rep.min_face_deg, angle_deg(b - at, c - at));
        }
    }

    // 6 dihedral angles: along edge (i,j), between the projections of the two
    // opposite vertices onto the plane orthogonal to the edge
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            P3 e = v[j] - v[i];
            double ee = dot(e, e);
            P3 u[2];
            int n = 0;
            for (int r = 0; r < 4; ++r) {
                if (r == i || r == j)
                    continue;
                P3 w = v[r] - v[i];
                double s = dot(w, e) / ee;
                u[n++] = {w.x - s * e.x, w.y - s * e.y, w.z - s * e.z};
            }
            rep.min_dihedral_deg = std::min(rep.min_dihedral_deg, angle_deg(u[0], u[1]));
        }
    }

    // coordinate volume z2 * t / 6 at unit longest edge
    rep.norm_volume_pct = (p.z2 * p.t / 6.0) / kRegularUnitVolume * 100.0;
    return rep;
}

QualityReport quality(const ShapeKey& k) {
    return quality(key_to_point(k));
}

std::vector<QualitySeriesRow> orbit_quality_series(const OrbitGraph& g) {
    std::vector<QualitySeriesRow> out;
    out.reserve(g.frontiers.size());
    for (std::size_t it = 0; it < g.frontiers.size(); ++it) {
        QualitySeriesRow row;
        row.iter = it;
        row.new_shapes = g.frontiers[it].size();
        if (row.new_shapes == 0) {
            row.min_dihedral_deg = row.min_face_deg = row.min_norm_vol_pct =
                std::numeric_limits<double>::quiet_NaN();
        } else {
            row.min_dihedral_deg = std::numeric_limits<double>::infinity();
            row.min_face_deg = std::numeric_limits<double>::infinity();
            row.min_norm_vol_pct = std::numeric_limits<double>::infinity();
            for (std::uint32_t id : g.frontiers[it]) {
                QualityReport q = quality(g.nodes[id]);
                row.min_dihedral_deg = std::min(row.min_dihedral_deg, q.min_dihedral_deg);
                row.min_face_deg = std::min(row.min_face_deg, q.min_face_deg);
                row.min_norm_vol_pct = std::min(row.min_norm_vol_pct, q.norm_volume_pct);
            }
        }
        out.push_back(row);
    }
    return out;
}

QualityReport quality_extrema(const OrbitGraph& g) {
    QualityReport rep;
    rep.min_dihedral_deg = std::numeric_limits<double>::infinity();
    rep.min_face_deg = std::numeric_limits<double>::infinity();
    rep.norm_volume_pct = std::numeric_limits<double>::infinity();
    for (const auto& k : g.nodes) {
        QualityReport q = quality(k);
        rep.min_dihedral_deg = std::min(rep.min_dihedral_deg, q.min_dihedral_deg);
        rep.min_face_deg = std::min(rep.min_face_deg, q.min_face_deg);
        rep.norm_volume_pct = std::min(rep.norm_volume_pct, q.norm_volume_pct);
    }
    return rep;
}

}  // namespace tetleb
