#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "metrics.hpp"
#include "orbit.hpp"
#include "shape.hpp"

namespace tetleb {

using Json = nlohmann::ordered_json;

// One tetrahedron input plus run options, as accepted by the CLI and the
// JSON input files. Exactly one of vertices / squared_lengths / key /
// catalog may be present.
struct InputSpec {
    std::optional<VertexSet> vertices;
    std::optional<SquaredLengths> lengths;
    std::optional<ShapeKey> key;
    std::optional<std::string> catalog_name;

    DedupMode mode;
    int max_iter = 40;
    TieBreak tie_break = TieBreak::Canonical;

    // resolves to an exact key (normalizing where needed)
    ShapeKey resolve() const;
    bool has_source() const {
        return vertices || lengths || key || catalog_name;
    }
};

InputSpec input_from_json(const Json& j);
Json input_to_json(const InputSpec& s);

VertexSet parse_vertices_arg(const std::string& text);      // "x,y,z;x,y,z;x,y,z;x,y,z"
SquaredLengths parse_lengths_arg(const std::string& text);  // "01,02,03,12,13,23 values"
ShapeKey parse_key_arg(const std::string& text);            // "z1,z2_sq,w1,w2_z2,t_sq"

// "catalog:NAME" | "key:..." | "vertices:..." | "lengths:..."
ShapeKey parse_input_uri(const std::string& text);

std::string format_double(double v);  // 12 significant digits

Json key_report_json(const ShapeKey& k, TieBreak tb);
Json orbit_summary_json(const OrbitGraph& g, bool include_nodes);
Json catalog_json();

void write_dot(const OrbitGraph& g, std::ostream& os);
void write_points_csv(const OrbitGraph& g, std::ostream& os);
void write_metrics_csv(const OrbitGraph& g, std::ostream& os);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

}  // namespace tetleb
