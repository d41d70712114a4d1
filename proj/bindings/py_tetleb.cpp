// Python bindings: exact values cross the boundary as strings, metric values
// as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "../src/catalog.hpp"
#include "../src/export.hpp"
#include "../src/leb.hpp"
#include "../src/metrics.hpp"
#include "../src/orbit.hpp"

namespace py = pybind11;
using namespace tetleb;

namespace {

using PyKey = std::array<std::string, 5>;

PyKey out_key(const ShapeKey& k) {
    return {to_string(k.z1), to_string(k.z2_sq), to_string(k.w1), to_string(k.w2_z2),
            to_string(k.t_sq)};
}

ShapeKey in_key(const PyKey& f) {
    return ShapeKey::from_strings(f);
}

ExploreOptions make_opts(int max_iter, const std::string& mode, unsigned threads,
                         const std::string& tie_break) {
    ExploreOptions opts;
    opts.max_iter = max_iter;
    opts.mode = DedupMode::parse(mode);
    opts.threads = threads;
    opts.tie_break = tie_break == "adjacent-longest" ? TieBreak::AdjacentLongest
                                                     : TieBreak::Canonical;
    return opts;
}

py::dict graph_dict(const OrbitGraph& g) {
    py::dict d;
    py::list nodes, points, edges, fronts;
    for (const auto& k : g.nodes) {
        nodes.append(out_key(k));
        NormalizedPoint p = key_to_point(k);
        points.append(py::make_tuple(p.z1, p.z2, p.w1, p.w2, p.t));
    }
    for (const auto& e : g.edges)
        edges.append(py::make_tuple(e.src, std::string(1, e.label), e.dst));
    for (const auto& f : g.frontiers)
        fronts.append(f);
    d["nodes"] = nodes;
    d["points"] = points;
    d["edges"] = edges;
    d["frontiers"] = fronts;
    d["closed"] = g.closed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tetleb, m) {
    m.doc() = "exact longest-edge-bisection dynamics on tetrahedral shape classes";

    py::register_exception<DegenerateInput>(m, "DegenerateInput");
    py::register_exception<LabelingInconsistency>(m, "LabelingInconsistencyError");
    py::register_exception<UnknownName>(m, "UnknownNameError");
    py::register_exception<InvalidPerturbation>(m, "InvalidPerturbationError");

    m.def("normalize_vertices", [](const std::vector<std::array<std::string, 3>>& vs) {
        if (vs.size() != 4)
            throw ParseError("need 4 vertices");
        VertexSet v;
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = {parse_rational(vs[i][0]), parse_rational(vs[i][1]),
                    parse_rational(vs[i][2])};
        return out_key(normalize(squared_edge_lengths(v)));
    });

    m.def("normalize_lengths", [](const std::array<std::string, 6>& e) {
        std::array<Rational, 6> q;
        for (std::size_t i = 0; i < 6; ++i)
            q[i] = parse_rational(e[i]);
        SquaredLengths s(std::move(q));
        s.require_valid();
        return out_key(normalize(s));
    });

    m.def("key_to_point", [](const PyKey& k) {
        NormalizedPoint p = key_to_point(in_key(k));
        return py::make_tuple(p.z1, p.z2, p.w1, p.w2, p.t);
    });

    m.def("key_to_lengths", [](const PyKey& k) {
        SquaredLengths s = key_to_lengths(in_key(k));
        std::array<std::string, 6> out;
        for (std::size_t i = 0; i < 6; ++i)
            out[i] = to_string(s.entries()[i]);
        return out;
    });

    m.def("validate_key", [](const PyKey& k) { return validate_key(in_key(k)); });

    m.def("phi_left", [](const PyKey& k) { return out_key(phi_left(in_key(k))); });
    m.def("phi_right", [](const PyKey& k) { return out_key(phi_right(in_key(k))); });

    m.def(
        "explore",
        [](const PyKey& root, int max_iter, const std::string& mode, unsigned threads,
           const std::string& tie_break) {
            return graph_dict(explore(in_key(root), make_opts(max_iter, mode, threads, tie_break)));
        },
        py::arg("root"), py::arg("max_iter") = 40, py::arg("mode") = "exact",
        py::arg("threads") = 0, py::arg("tie_break") = "canonical");

    m.def("product_distance",
          [](const PyKey& a, const PyKey& b) { return product_distance(in_key(a), in_key(b)); });

    m.def("cluster_mean_distance", [](const std::vector<PyKey>& cluster, const PyKey& ref) {
        std::vector<ShapeKey> keys;
        keys.reserve(cluster.size());
        for (const auto& k : cluster)
            keys.push_back(in_key(k));
        return cluster_mean_distance(keys, in_key(ref));
    });

    m.def("quality", [](const PyKey& k) {
        QualityReport q = quality(in_key(k));
        return py::make_tuple(q.min_dihedral_deg, q.min_face_deg, q.norm_volume_pct);
    });

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog())
            names.push_back(e.name);
        return names;
    });

    m.def("catalog_key", [](const std::string& name) { return out_key(catalog_get(name).key); });

    m.def("perturbation_family", [](const std::string& component, const std::string& alpha) {
        return out_key(perturbation_family(component, parse_rational(alpha)));
    });

    m.def(
        "sweep",
        [](const std::string& component, const std::vector<std::string>& alphas, int max_iter,
           const std::string& mode) {
            std::vector<Rational> as;
            for (const auto& a : alphas)
                as.push_back(parse_rational(a));
            ExploreOptions opts = make_opts(max_iter, mode, 0, "canonical");
            py::list out;
            for (const auto& row : sweep(perturbation_family_fn(component), as, opts)) {
                const char* status = row.status == SweepStatus::Closed   ? "closed"
                                     : row.status == SweepStatus::Open   ? "open"
                                                                         : "invalid";
                out.append(py::make_tuple(to_string(row.alpha), status, row.length));
            }
            return out;
        },
        py::arg("component"), py::arg("alphas"), py::arg("max_iter") = 40,
        py::arg("mode") = "exact");
}
