// Command-line front end: graph generation, spectra, eigenvalue-bound
// verification, circle packings, subdivisions, and family sweep reports.
//
// Exit codes: 0 success, 1 operational error (bad input, solver failure),
// 2 at least one asserted bound violated (the violating rows are printed).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgs/bounds.hpp"
#include "qgs/discrete.hpp"
#include "qgs/error.hpp"
#include "qgs/experiment.hpp"
#include "qgs/format.hpp"
#include "qgs/generators.hpp"
#include "qgs/graph.hpp"
#include "qgs/graph_json.hpp"
#include "qgs/log.hpp"
#include "qgs/metric.hpp"
#include "qgs/packing.hpp"
#include "qgs/svg.hpp"

namespace {

using namespace qgs;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        write_text_file(output_path, text);
}

GraphInput load_input(const std::string& input_path) {
    require(!input_path.empty(), "an input graph file is required (--input)");
    return load_graph(input_path);
}

// ----------------------------------------------------------------- generate

struct GenerateArgs {
    std::string family = "star";
    int size = 5;
    std::string profile = "equilateral";
    double length = 1.0;
};

int cmd_generate(const GenerateArgs& a, std::uint64_t seed, const std::string& output_path) {
    GeneratedGraph g = [&] {
        bool dyadic = a.profile == "dyadic-decay";
        if (a.family == "star") return make_star(a.size, a.length);
        if (a.family == "path") return make_path(a.size, a.length);
        if (a.family == "cycle") return make_cycle(a.size, a.length);
        if (a.family == "complete") return make_complete(a.size, a.length);
        if (a.family == "interval") return make_interval(a.length);
        if (a.family == "loop") return make_loop(a.length);
        if (a.family == "binary-tree") return make_binary_tree(a.size, dyadic);
        if (a.family == "random-planar") return make_random_planar(a.size, seed);
        fail("unknown family '" + a.family +
             "' (expected star, path, cycle, complete, interval, loop, binary-tree or random-planar)");
    }();

    GraphJsonFields fields;
    fields.lengths = &g.metric.lengths();
    if (g.embedding) fields.embedding = &*g.embedding;
    fields.genus = g.genus;
    emit(graph_to_json(g.metric.graph(), fields), output_path);
    log_info("generated ", g.name, ": ", g.metric.graph().num_vertices(), " vertices, ",
             g.metric.graph().num_edges(), " edges");
    return 0;
}

// ----------------------------------------------------------------- spectrum

struct SpectrumArgs {
    int count = 10;
    std::string solver = "secular";
    double mesh_h = 0.0;  // 0 = l_min / 64
    bool normalized = false;
};

int cmd_spectrum_metric(const SpectrumArgs& a, const std::string& input_path, const std::string& output_path,
                        const std::string& format, double tol) {
    GraphInput in = load_input(input_path);
    MetricGraph g = in.metric();
    double h = a.mesh_h > 0 ? a.mesh_h : g.min_length() / 64;

    std::vector<Spectrum> spectra;
    if (a.solver == "secular" || a.solver == "both") {
        SecularOptions opt;
        opt.accept_tol = tol;
        spectra.push_back(eigenvalues_secular(g, a.count, opt));
    }
    if (a.solver == "fem" || a.solver == "both") {
        spectra.push_back(eigenvalues_fem(g, a.count, h));
    }
    require(!spectra.empty(), "unknown solver '" + a.solver + "' (expected secular, fem or both)");

    std::string text;
    if (format == "json") {
        if (spectra.size() == 1) {
            text = spectrum_to_json(spectra[0]) + "\n";
        } else {
            text = "[" + spectrum_to_json(spectra[0]) + "," + spectrum_to_json(spectra[1]) + "]\n";
        }
    } else {
        text = spectrum_to_csv(spectra[0], true);
        for (std::size_t i = 1; i < spectra.size(); ++i) {
            std::string more = spectrum_to_csv(spectra[i], true);
            text += more.substr(more.find('\n') + 1);  // drop the repeated header
        }
    }
    emit(text, output_path);
    return 0;
}

int cmd_spectrum_discrete(const SpectrumArgs& a, const std::string& input_path,
                          const std::string& output_path, const std::string& format) {
    GraphInput in = load_input(input_path);
    WeightedGraph w = a.normalized ? normalized_laplacian(in.graph, in.omega) : in.weighted();
    Spectrum s = eigenvalues(w);
    emit(format == "json" ? spectrum_to_json(s) + "\n" : spectrum_to_csv(s, false), output_path);
    return 0;
}

// ------------------------------------------------------------------- bounds

struct BoundsArgs {
    bool all = false;
    std::vector<std::string> ids;
    int k = 2;
    int genus_override = -1;
    bool genus_set = false;
    bool planar_attested = false;
};

BoundReport eval_file_bound(const GraphInput& in, const MetricGraph& metric, const std::string& id, int k,
                            bool planar, int genus) {
    bool has_weights = in.has_m || in.has_mu;
    if (id == "spielman-teng") {
        WeightedGraph w = has_weights ? in.weighted()
                                      : WeightedGraph(in.graph, std::vector<double>(in.graph.num_vertices(), 1.0),
                                                      std::vector<double>(in.graph.num_edges(), 1.0));
        return bound_spielman_teng(w, planar);
    }
    if (id == "weighted-planar")
        return bound_weighted_planar(has_weights ? in.weighted() : comparison_weights(metric), planar);
    if (id == "metric-planar") return bound_metric_planar(metric, planar);
    if (id == "comparison") return bound_comparison(metric);
    if (id == "tree-diameter") return bound_tree_diameter(metric);
    if (id == "normalized-genus" || id == "metric-genus" || id == "betti-genus") {
        require(genus >= 0, "bound '" + id + "' needs an embedding or a declared genus (--genus)");
        if (id == "normalized-genus") return bound_normalized_genus(in.graph, in.omega, genus, k);
        if (id == "metric-genus") return bound_metric_genus(metric, genus, k);
        return bound_betti_genus(metric, genus, k);
    }
    fail("unknown bound id '" + id +
         "' (expected spielman-teng, weighted-planar, metric-planar, comparison, normalized-genus, "
         "metric-genus, betti-genus or tree-diameter)");
}

int cmd_bounds(const BoundsArgs& a, const std::string& input_path, const std::string& output_path,
               const std::string& format) {
    GraphInput in = load_input(input_path);
    MetricGraph metric = in.metric();
    bool planar = (in.embedding && in.embedding->genus() == 0) || a.planar_attested;
    int genus = a.genus_set ? a.genus_override
                            : (in.embedding ? in.embedding->genus() : in.declared_genus.value_or(-1));

    std::vector<std::string> ids = a.ids;
    if (a.all) {
        ids = {"spielman-teng", "weighted-planar", "metric-planar", "comparison"};
        if (in.graph.betti() == 0) ids.push_back("tree-diameter");
        if (genus >= 0) {
            ids.push_back("normalized-genus");
            ids.push_back("metric-genus");
            // The equalizing-subdivision report has a hard lower threshold on
            // k; include it only when the requested index is admissible.
            double threshold = metric.total_length() / metric.min_length() - in.graph.betti() + 1;
            if (a.k >= threshold) ids.push_back("betti-genus");
        }
    }
    require(!ids.empty(), "no bounds selected: pass --all or --bound <id>");

    std::vector<BoundReport> reports;
    for (const std::string& id : ids) reports.push_back(eval_file_bound(in, metric, id, a.k, planar, genus));

    emit(format == "json" ? bounds_to_json(reports) : bounds_to_csv(reports), output_path);

    int code = 0;
    for (const BoundReport& r : reports) {
        if (r.verdict != Verdict::violated) continue;
        code = 2;
        std::cerr << "violated: " << r.bound_id << " k=" << r.k << " lhs=" << fmt_double(r.lhs)
                  << " rhs=" << fmt_double(r.rhs) << "\n";
    }
    return code;
}

// ------------------------------------------------------------- pack/balance

int cmd_pack(bool do_balance, const std::string& input_path, const std::string& output_path,
             const std::string& svg_path) {
    GraphInput in = load_input(input_path);
    require(in.embedding.has_value(), "packing needs an embedding with face walks in the input file");
    require(in.embedding->genus() == 0, "packing needs a genus-0 embedding");

    CirclePacking packing = pack_planar(in.graph, *in.embedding);
    std::string text;
    if (do_balance) {
        BalanceState state = balance(packing, in.graph, in.m);
        text = packing_to_json(packing, &state);
    } else {
        text = packing_to_json(packing);
    }
    emit(text, output_path);
    if (!svg_path.empty()) write_text_file(svg_path, packing_to_svg(packing));
    return 0;
}

// ---------------------------------------------------------------- subdivide

struct SubdivideArgs {
    int parts = 0;
    int equalize_k = 0;
};

int cmd_subdivide(const SubdivideArgs& a, const std::string& input_path, const std::string& output_path) {
    require((a.parts >= 1) != (a.equalize_k >= 1),
            "pass exactly one of --parts P or --equalize K");
    GraphInput in = load_input(input_path);
    MetricGraph g = in.metric();

    MetricGraph out = a.parts >= 1 ? subdivide_metric(g, a.parts).graph
                                   : betti_subdivision(g, a.equalize_k).subdivision.graph;

    // Face walks do not survive subdivision bookkeeping; only the metric
    // structure is written.
    GraphJsonFields fields;
    fields.lengths = &out.lengths();
    emit(graph_to_json(out.graph(), fields), output_path);
    return 0;
}

// ------------------------------------------------------------------- report

struct ReportArgs {
    std::string preset;
    std::string family = "star";
    int size_min = 3;
    int size_max = 8;
    int count = 5;
    std::string profile = "equilateral";
    std::vector<std::string> ids;
    int k = 2;
};

int cmd_report(const ReportArgs& a, const std::string& input_path, const std::string& output_path,
               const std::string& format, std::uint64_t seed, int jobs) {
    ExperimentSpec spec;
    spec.family = a.preset.empty() ? a.family : a.preset;
    spec.size_min = a.size_min;
    spec.size_max = a.size_max;
    spec.count = a.count;
    spec.profile = parse_length_profile(a.profile);
    spec.bound_ids = a.ids;
    spec.k = a.k;
    spec.seed = seed;
    spec.jobs = jobs;
    spec.format = format;
    spec.output_path = output_path;
    spec.input_path = input_path;
    return run_experiment(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of metric and weighted graphs, circle packings, and eigenvalue-bound reports"};
    app.require_subcommand(1);

    std::string input_path, output_path, format = "csv", svg_path;
    std::uint64_t seed = 1;
    int jobs = 1;
    double tol = 1e-8;
    app.add_option("--input", input_path, "Input graph file (JSON)");
    app.add_option("--output", output_path, "Output file (default: stdout)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "Seed for generators and sweeps");
    app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--tol", tol, "Solver acceptance tolerance")->check(CLI::PositiveNumber);

    GenerateArgs gen;
    CLI::App* c_generate =
        app.add_subcommand("generate", "Generate a named graph family instance (always writes graph JSON)");
    c_generate->fallthrough();
    c_generate->add_option("--family", gen.family,
                           "star | path | cycle | complete | interval | loop | binary-tree | random-planar");
    c_generate->add_option("--size", gen.size, "Edges (star), vertices (path/cycle/complete/random-planar), "
                                               "or height (binary-tree)");
    c_generate->add_option("--profile", gen.profile, "equilateral | dyadic-decay (binary-tree only)");
    c_generate->add_option("--length", gen.length, "Base edge length")->check(CLI::PositiveNumber);

    SpectrumArgs spect;
    CLI::App* c_spectrum = app.add_subcommand("spectrum", "Eigenvalues of the metric or weighted Laplacian");
    c_spectrum->fallthrough();
    c_spectrum->require_subcommand(1);
    CLI::App* c_metric = c_spectrum->add_subcommand(
        "metric", "Kirchhoff Laplacian eigenvalues (CSV: k,lambda,multiplicity,solver)");
    c_metric->fallthrough();
    c_metric->add_option("--count", spect.count, "Number of eigenvalues")->check(CLI::PositiveNumber);
    c_metric->add_option("--solver", spect.solver, "secular | fem | both");
    c_metric->add_option("--mesh-h", spect.mesh_h, "FEM mesh width (default: min edge length / 64)");
    CLI::App* c_discrete =
        c_spectrum->add_subcommand("discrete", "Weighted graph Laplacian eigenvalues (CSV: k,lambda)");
    c_discrete->fallthrough();
    c_discrete->add_flag("--normalized", spect.normalized,
                         "Use the normalized Laplacian built from edge weights omega");

    BoundsArgs bnd;
    CLI::App* c_bounds = app.add_subcommand("bounds", "Evaluate eigenvalue bounds on a graph file");
    c_bounds->fallthrough();
    c_bounds->add_flag("--all", bnd.all, "Evaluate every applicable bound");
    c_bounds->add_option("--bound", bnd.ids, "Bound id (repeatable)");
    c_bounds->add_option("--k", bnd.k, "Eigenvalue index for indexed bounds")->check(CLI::PositiveNumber);
    CLI::Option* genus_opt = c_bounds->add_option("--genus", bnd.genus_override,
                                                  "Declared genus when the file carries none");
    c_bounds->add_flag("--planar", bnd.planar_attested,
                       "Attest planarity for inputs without a genus-0 embedding");

    CLI::App* c_pack = app.add_subcommand("pack", "Circle packing of an embedded planar graph");
    c_pack->fallthrough();
    c_pack->add_option("--svg", svg_path, "Also write an SVG rendering");
    CLI::App* c_balance =
        app.add_subcommand("balance", "Pack, lift to the sphere, and balance the weighted cap centers");
    c_balance->fallthrough();
    c_balance->add_option("--svg", svg_path, "Also write an SVG rendering");

    SubdivideArgs sub;
    CLI::App* c_subdivide = app.add_subcommand("subdivide", "Split edges into equal-length parts");
    c_subdivide->fallthrough();
    c_subdivide->add_option("--parts", sub.parts, "Parts per edge (uniform)")->check(CLI::PositiveNumber);
    c_subdivide->add_option("--equalize", sub.equalize_k,
                            "Equalizing subdivision for eigenvalue index K (lengths land in [L/2n, L/n))")
        ->check(CLI::PositiveNumber);

    ReportArgs rep;
    CLI::App* c_report = app.add_subcommand("report", "Family sweeps: bounds over generated instances");
    c_report->fallthrough();
    c_report->add_option("--preset", rep.preset, "star-sweep | k4-sweep | tree-table");
    c_report->add_option("--family", rep.family,
                         "star | path | cycle | complete | binary-tree | random-planar | random-connected "
                         "| file");
    c_report->add_option("--size-min", rep.size_min, "Smallest family size");
    c_report->add_option("--size-max", rep.size_max, "Largest family size");
    c_report->add_option("--count", rep.count, "Instances for random families")->check(CLI::PositiveNumber);
    c_report->add_option("--profile", rep.profile, "equilateral | dyadic-decay | log-uniform");
    c_report->add_option("--bound", rep.ids, "Bound id (repeatable; default: family-appropriate set)");
    c_report->add_option("--k", rep.k, "Eigenvalue index for indexed bounds")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);

        if (c_generate->parsed()) return cmd_generate(gen, seed, output_path);
        if (c_spectrum->parsed()) {
            if (c_metric->parsed()) return cmd_spectrum_metric(spect, input_path, output_path, format, tol);
            return cmd_spectrum_discrete(spect, input_path, output_path, format);
        }
        if (c_bounds->parsed()) {
            bnd.genus_set = genus_opt->count() > 0;
            return cmd_bounds(bnd, input_path, output_path, format);
        }
        if (c_pack->parsed()) return cmd_pack(false, input_path, output_path, svg_path);
        if (c_balance->parsed()) return cmd_pack(true, input_path, output_path, svg_path);
        if (c_subdivide->parsed()) return cmd_subdivide(sub, input_path, output_path);
        if (c_report->parsed()) return cmd_report(rep, input_path, output_path, format, seed, jobs);
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const qgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
