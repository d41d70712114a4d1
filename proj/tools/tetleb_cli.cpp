// Command-line front end: normalization, orbit enumeration, sweeps, metric
// queries and exporters over the exact tetrahedron-shape engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "../src/export.hpp"

using namespace tetleb;

namespace {

struct InputFlags {
    std::string catalog, key, lengths, vertices, json;
    std::string mode = "exact";
    std::string tie_break = "canonical";
    int max_iter = 40;
    unsigned threads = 0;
};

void add_source_flags(CLI::App* cmd, InputFlags& f) {
    auto* g = cmd->add_option_group("input", "tetrahedron source (exactly one)");
    g->add_option("--catalog", f.catalog, "catalog entry name");
    g->add_option("--key", f.key, "exact key z1,z2_sq,w1,w2_z2,t_sq");
    g->add_option("--lengths", f.lengths, "squared lengths 01,02,03,12,13,23");
    g->add_option("--vertices", f.vertices, "four vertices \"x,y,z;x,y,z;x,y,z;x,y,z\"");
    g->add_option("--json", f.json, "InputSpec JSON file ('-' for stdin)");
    g->require_option(1);
}

void add_run_flags(CLI::App* cmd, InputFlags& f) {
    cmd->add_option("--max-iter", f.max_iter, "iteration budget (default 40)");
    cmd->add_option("--mode", f.mode, "dedup mode: exact | rounded[:digits]");
    cmd->add_option("--threads", f.threads, "worker threads (default: all cores)");
}

InputSpec build_spec(const InputFlags& f) {
    InputSpec spec;
    if (!f.json.empty()) {
        Json j;
        if (f.json == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(f.json);
            if (!in)
                throw ParseError("cannot open '" + f.json + "'");
            j = Json::parse(in);
        }
        spec = input_from_json(j);
    } else {
        if (!f.catalog.empty())
            spec.catalog_name = f.catalog;
        if (!f.key.empty())
            spec.key = parse_key_arg(f.key);
        if (!f.lengths.empty())
            spec.lengths = parse_lengths_arg(f.lengths);
        if (!f.vertices.empty())
            spec.vertices = parse_vertices_arg(f.vertices);
        if (!spec.has_source())
            throw ParseError("no tetrahedron source given");
        spec.mode = DedupMode::parse(f.mode);
        spec.max_iter = f.max_iter;
        if (f.tie_break == "adjacent-longest")
            spec.tie_break = TieBreak::AdjacentLongest;
        else if (f.tie_break != "canonical")
            throw ParseError("tie-break must be 'canonical' or 'adjacent-longest'");
    }
    return spec;
}

ExploreOptions explore_options(const InputSpec& spec, unsigned threads) {
    ExploreOptions opts;
    opts.max_iter = spec.max_iter;
    opts.mode = spec.mode;
    opts.tie_break = spec.tie_break;
    opts.threads = threads;
    return opts;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    std::ofstream os(path);
    if (!os)
        throw ParseError("cannot write '" + path + "'");
    fn(os);
}

std::vector<ShapeKey> read_cluster(const std::string& path) {
    Json j;
    if (path == "-") {
        j = Json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open '" + path + "'");
        j = Json::parse(in);
    }
    if (!j.is_array())
        throw ParseError("cluster file must be a JSON array of 5-element key arrays");
    std::vector<ShapeKey> keys;
    for (const auto& row : j) {
        std::array<std::string, 5> f;
        for (std::size_t i = 0; i < 5; ++i)
            f[i] = row.at(i).get<std::string>();
        keys.push_back(ShapeKey::from_strings(f));
    }
    return keys;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact longest-edge-bisection dynamics on tetrahedral shape classes"};
    app.require_subcommand(1);

    // normalize
    InputFlags nf;
    bool strict = false;
    auto* cmd_norm = app.add_subcommand("normalize", "map a tetrahedron to its exact shape key");
    add_source_flags(cmd_norm, nf);
    cmd_norm->add_option("--tie-break", nf.tie_break, "canonical | adjacent-longest");
    cmd_norm->add_flag("--strict", strict,
                       "fail (exit 3) when canonical labelings disagree beyond the mirror pair");

    // orbit
    InputFlags of;
    std::string out_graph, out_points, out_metrics;
    bool no_nodes = false;
    auto* cmd_orbit = app.add_subcommand("orbit", "breadth-first orbit enumeration");
    add_source_flags(cmd_orbit, of);
    add_run_flags(cmd_orbit, of);
    cmd_orbit->add_option("--tie-break", of.tie_break, "canonical | adjacent-longest");
    cmd_orbit->add_option("--out-graph", out_graph, "write the orbit graph as DOT");
    cmd_orbit->add_option("--out-points", out_points, "write normalized points as CSV");
    cmd_orbit->add_option("--out-metrics", out_metrics, "write per-iteration quality CSV");
    cmd_orbit->add_flag("--no-nodes", no_nodes, "omit per-node detail from the summary");

    // sweep
    InputFlags sf;
    std::string family, alpha_min, alpha_max, step = "1/100";
    auto* cmd_sweep = app.add_subcommand("sweep", "orbit lengths along a perturbation family");
    cmd_sweep->add_option("--family", family, "component: z1 | z2 | w1 | w2 | t")->required();
    cmd_sweep->add_option("--alpha-min", alpha_min, "first alpha (rational)")->required();
    cmd_sweep->add_option("--alpha-max", alpha_max, "last alpha (rational)")->required();
    cmd_sweep->add_option("--step", step, "alpha step (default 1/100)");
    add_run_flags(cmd_sweep, sf);

    // distance
    std::vector<std::string> dpos;
    std::string cluster_file, ref_uri;
    auto* cmd_dist = app.add_subcommand("distance", "product-metric distance between shapes");
    cmd_dist->add_option("inputs", dpos, "two inputs: catalog:NAME | key:... | vertices:... | lengths:...");
    cmd_dist->add_option("--cluster", cluster_file, "JSON key list; prints mean distance to --ref");
    cmd_dist->add_option("--ref", ref_uri, "reference shape for --cluster");

    // word
    InputFlags wf;
    std::string from_uri, to_uri;
    auto* cmd_word = app.add_subcommand("word", "shortest L/R word between orbit nodes");
    add_source_flags(cmd_word, wf);
    add_run_flags(cmd_word, wf);
    cmd_word->add_option("--from", from_uri, "source shape")->required();
    cmd_word->add_option("--to", to_uri, "target shape")->required();

    // catalog
    auto* cmd_cat = app.add_subcommand("catalog", "export the named-tetrahedra catalog as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_norm->parsed()) {
            InputSpec spec = build_spec(nf);
            ShapeKey k;
            if (strict && (spec.lengths || spec.vertices)) {
                SquaredLengths s = spec.lengths ? *spec.lengths
                                                : squared_edge_lengths(*spec.vertices);
                s.require_valid();
                k = normalize_strict(s, spec.tie_break);
            } else {
                k = spec.resolve();
            }
            std::cout << key_report_json(k, spec.tie_break).dump(2) << "\n";
        } else if (cmd_orbit->parsed()) {
            InputSpec spec = build_spec(of);
            ShapeKey root = spec.resolve();
            OrbitGraph g = explore(root, explore_options(spec, of.threads));
            if (!out_graph.empty())
                write_file(out_graph, [&](std::ostream& os) { write_dot(g, os); });
            if (!out_points.empty())
                write_file(out_points, [&](std::ostream& os) { write_points_csv(g, os); });
            if (!out_metrics.empty())
                write_file(out_metrics, [&](std::ostream& os) { write_metrics_csv(g, os); });
            std::cout << orbit_summary_json(g, !no_nodes).dump(2) << "\n";
        } else if (cmd_sweep->parsed()) {
            Rational lo = parse_rational(alpha_min);
            Rational hi = parse_rational(alpha_max);
            Rational st = parse_rational(step);
            if (st <= 0)
                throw ParseError("step must be positive");
            std::vector<Rational> alphas;
            for (Rational a = lo; a <= hi; a += st)
                alphas.push_back(a);
            ExploreOptions opts;
            opts.max_iter = sf.max_iter;
            opts.mode = DedupMode::parse(sf.mode);
            opts.threads = sf.threads;
            auto rows = sweep(perturbation_family_fn(family), alphas, opts);
            write_sweep_csv(rows, std::cout);
        } else if (cmd_dist->parsed()) {
            if (!cluster_file.empty()) {
                if (ref_uri.empty())
                    throw ParseError("--cluster needs --ref");
                auto keys = read_cluster(cluster_file);
                std::cout << format_double(
                                 cluster_mean_distance(keys, parse_input_uri(ref_uri)))
                          << "\n";
            } else {
                if (dpos.size() != 2)
                    throw ParseError("distance needs two inputs (or --cluster with --ref)");
                double d = product_distance(parse_input_uri(dpos[0]), parse_input_uri(dpos[1]));
                std::cout << format_double(d) << "\n";
            }
        } else if (cmd_word->parsed()) {
            InputSpec spec = build_spec(wf);
            OrbitGraph g = explore(spec.resolve(), explore_options(spec, wf.threads));
            auto word = find_word(g, parse_input_uri(from_uri), parse_input_uri(to_uri));
            if (word)
                std::cout << "\"" << *word << "\"\n";
            else
                std::cout << "unreachable\n";
        } else if (cmd_cat->parsed()) {
            std::cout << catalog_json().dump(2) << "\n";
        }
    } catch (const LabelingInconsistency& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
