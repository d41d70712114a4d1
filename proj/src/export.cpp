#include "export.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace tetleb {

namespace {

constexpr const char* kPairNames[6] = {"01", "02", "03", "12", "13", "23"};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ShapeKey InputSpec::resolve() const {
    if (key)
        return *key;
    if (catalog_name)
        return catalog_get(*catalog_name).key;
    if (lengths) {
        lengths->require_valid();
        return normalize(*lengths, tie_break);
    }
    if (vertices)
        return normalize(squared_edge_lengths(*vertices), tie_break);
    throw ParseError("no tetrahedron source given");
}

VertexSet parse_vertices_arg(const std::string& text) {
    auto parts = split(text, ';');
    if (parts.size() != 4)
        throw ParseError("expected 4 vertices separated by ';'");
    VertexSet v;
    for (std::size_t i = 0; i < 4; ++i) {
        auto c = split(parts[i], ',');
        if (c.size() != 3)
            throw ParseError("vertex needs 3 coordinates: '" + parts[i] + "'");
        v[i] = {parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2])};
    }
    return v;
}

SquaredLengths parse_lengths_arg(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 6)
        throw ParseError("expected 6 squared lengths in order 01,02,03,12,13,23");
    std::array<Rational, 6> e;
    for (std::size_t i = 0; i < 6; ++i)
        e[i] = parse_rational(parts[i]);
    return SquaredLengths(std::move(e));
}

ShapeKey parse_key_arg(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 5)
        throw ParseError("expected 5 key fields z1,z2_sq,w1,w2_z2,t_sq");
    return ShapeKey{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                    parse_rational(parts[3]), parse_rational(parts[4])};
}

ShapeKey parse_input_uri(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        return catalog_get(text).key;  // bare catalog name
    std::string scheme = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (scheme == "catalog")
        return catalog_get(rest).key;
    if (scheme == "key")
        return parse_key_arg(rest);
    if (scheme == "vertices")
        return normalize(squared_edge_lengths(parse_vertices_arg(rest)));
    if (scheme == "lengths") {
        SquaredLengths s = parse_lengths_arg(rest);
        s.require_valid();
        return normalize(s);
    }
    throw ParseError("unknown input scheme '" + scheme + "'");
}

InputSpec input_from_json(const Json& j) {
    InputSpec spec;
    int sources = 0;
    if (j.contains("vertices")) {
        ++sources;
        const auto& arr = j.at("vertices");
        if (!arr.is_array() || arr.size() != 4)
            throw ParseError("'vertices' must be an array of 4 coordinate triples");
        VertexSet v;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& row = arr.at(i);
            if (!row.is_array() || row.size() != 3)
                throw ParseError("each vertex needs 3 coordinates");
            v[i] = {parse_rational(row.at(0).get<std::string>()),
                    parse_rational(row.at(1).get<std::string>()),
                    parse_rational(row.at(2).get<std::string>())};
        }
        spec.vertices = std::move(v);
    }
    if (j.contains("squared_lengths")) {
        ++sources;
        const auto& obj = j.at("squared_lengths");
        std::array<Rational, 6> e;
        for (int n = 0; n < 6; ++n) {
            if (!obj.contains(kPairNames[n]))
                throw ParseError(std::string("missing squared length '") + kPairNames[n] + "'");
            e[static_cast<std::size_t>(n)] =
                parse_rational(obj.at(kPairNames[n]).get<std::string>());
        }
        spec.lengths = SquaredLengths(std::move(e));
    }
    if (j.contains("key")) {
        ++sources;
        const auto& arr = j.at("key");
        if (!arr.is_array() || arr.size() != 5)
            throw ParseError("'key' must be an array of 5 rationals");
        std::array<std::string, 5> f;
        for (std::size_t i = 0; i < 5; ++i)
            f[i] = arr.at(i).get<std::string>();
        spec.key = ShapeKey::from_strings(f);
    }
    if (j.contains("catalog")) {
        ++sources;
        spec.catalog_name = j.at("catalog").get<std::string>();
    }
    if (sources != 1)
        throw ParseError("input needs exactly one of vertices / squared_lengths / key / catalog");

    if (j.contains("mode"))
        spec.mode = DedupMode::parse(j.at("mode").get<std::string>());
    if (j.contains("digits")) {
        spec.mode.digits = j.at("digits").get<int>();
        if (spec.mode.digits < 1)
            throw ParseError("digits must be >= 1");
    }
    if (j.contains("max_iter"))
        spec.max_iter = j.at("max_iter").get<int>();
    if (j.contains("tie_break")) {
        std::string tb = j.at("tie_break").get<std::string>();
        if (tb == "canonical")
            spec.tie_break = TieBreak::Canonical;
        else if (tb == "adjacent-longest")
            spec.tie_break = TieBreak::AdjacentLongest;
        else
            throw ParseError("tie_break must be 'canonical' or 'adjacent-longest'");
    }
    return spec;
}

Json input_to_json(const InputSpec& s) {
    Json j;
    if (s.vertices) {
        Json arr = Json::array();
        for (const auto& v : *s.vertices)
            arr.push_back({to_string(v.x), to_string(v.y), to_string(v.z)});
        j["vertices"] = std::move(arr);
    }
    if (s.lengths) {
        Json obj;
        for (int n = 0; n < 6; ++n)
            obj[kPairNames[n]] = to_string(s.lengths->entries()[static_cast<std::size_t>(n)]);
        j["squared_lengths"] = std::move(obj);
    }
    if (s.key) {
        j["key"] = {to_string(s.key->z1), to_string(s.key->z2_sq), to_string(s.key->w1),
                    to_string(s.key->w2_z2), to_string(s.key->t_sq)};
    }
    if (s.catalog_name)
        j["catalog"] = *s.catalog_name;
    return j;
}

namespace {

Json key_json(const ShapeKey& k) {
    Json j;
    j["z1"] = to_string(k.z1);
    j["z2_sq"] = to_string(k.z2_sq);
    j["w1"] = to_string(k.w1);
    j["w2_z2"] = to_string(k.w2_z2);
    j["t_sq"] = to_string(k.t_sq);
    return j;
}

Json point_json(const NormalizedPoint& p) {
    Json j;
    j["z1"] = format_double(p.z1);
    j["z2"] = format_double(p.z2);
    j["w1"] = format_double(p.w1);
    j["w2"] = format_double(p.w2);
    j["t"] = format_double(p.t);
    return j;
}

}  // namespace

Json key_report_json(const ShapeKey& k, TieBreak tb) {
    Json j;
    j["key"] = key_json(k);
    j["point"] = point_json(key_to_point(k));
    j["violations"] = validate_key(k);
    j["canonical_labelings"] = canonical_labelings(key_to_lengths(k), tb).size();
    return j;
}

Json orbit_summary_json(const OrbitGraph& g, bool include_nodes) {
    Json j;
    j["root"] = key_json(g.nodes.at(0));
    j["node_count"] = g.nodes.size();
    j["closed"] = g.closed;
    j["frontier_counts"] = frontier_counts(g);
    j["cycles"] = cycle_components(g);
    QualityReport q = quality_extrema(g);
    j["quality_extrema"] = {{"min_dihedral_deg", format_double(q.min_dihedral_deg)},
                            {"min_face_deg", format_double(q.min_face_deg)},
                            {"min_norm_vol_pct", format_double(q.norm_volume_pct)}};
    if (include_nodes) {
        Json nodes = Json::array();
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            Json n;
            n["id"] = i;
            n["key"] = key_json(g.nodes[i]);
            n["point"] = point_json(key_to_point(g.nodes[i]));
            nodes.push_back(std::move(n));
        }
        j["nodes"] = std::move(nodes);
        Json edges = Json::array();
        for (const auto& e : g.edges)
            edges.push_back({e.src, std::string(1, e.label), e.dst});
        j["edges"] = std::move(edges);
    }
    return j;
}

Json catalog_json() {
    Json arr = Json::array();
    for (const auto& e : catalog()) {
        InputSpec spec;
        if (e.vertices)
            spec.vertices = e.vertices;
        else
            spec.lengths = e.lengths;
        Json j = input_to_json(spec);
        Json out;
        out["name"] = e.name;
        out["summary"] = e.summary;
        for (auto& [k, v] : j.items())
            out[k] = v;
        out["key"] = {to_string(e.key.z1), to_string(e.key.z2_sq), to_string(e.key.w1),
                      to_string(e.key.w2_z2), to_string(e.key.t_sq)};
        arr.push_back(std::move(out));
    }
    return arr;
}

void write_dot(const OrbitGraph& g, std::ostream& os) {
    os << "digraph orbit {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << i << "\"];\n";
    for (const auto& e : g.edges) {
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\", color=\""
           << (e.label == 'L' ? "red" : "blue") << "\"];\n";
    }
    os << "}\n";
}

void write_points_csv(const OrbitGraph& g, std::ostream& os) {
    os << "z1,z2,w1,w2,t\n";
    for (const auto& k : g.nodes) {
        NormalizedPoint p = key_to_point(k);
        os << format_double(p.z1) << ',' << format_double(p.z2) << ',' << format_double(p.w1)
           << ',' << format_double(p.w2) << ',' << format_double(p.t) << '\n';
    }
}

void write_metrics_csv(const OrbitGraph& g, std::ostream& os) {
    os << "iter,new_shapes,min_dihedral_deg,min_face_deg,min_norm_vol_pct\n";
    for (const auto& row : orbit_quality_series(g)) {
        os << row.iter << ',' << row.new_shapes << ',';
        if (row.new_shapes == 0)
            os << ",,";
        else
            os << format_double(row.min_dihedral_deg) << ',' << format_double(row.min_face_deg)
               << ',' << format_double(row.min_norm_vol_pct);
        os << '\n';
    }
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "alpha,orbit\n";
    for (const auto& r : rows) {
        os << to_string(r.alpha) << ',';
        switch (r.status) {
            case SweepStatus::Closed:
                os << r.length;
                break;
            case SweepStatus::Open:
                os << "open";
                break;
            case SweepStatus::Invalid:
                os << "invalid";
                break;
        }
        os << '\n';
    }
}

}  // namespace tetleb
