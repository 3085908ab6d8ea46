#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <iostream>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qgs/error.hpp"
#include "qgs/experiment.hpp"
#include "qgs/format.hpp"
#include "qgs/graph_json.hpp"
#include "qgs/log.hpp"
#include "qgs/metric.hpp"
#include "report_json.hpp"

namespace qgs {

namespace {

WeightedGraph unit_weights(const CombinatorialGraph& g) {
    return WeightedGraph(g, std::vector<double>(g.num_vertices(), 1.0),
                         std::vector<double>(g.num_edges(), 1.0));
}

bool attested_planar(const GeneratedGraph& g) { return g.embedding.has_value() && g.genus == 0; }

std::vector<GeneratedGraph> generate_instances(const ExperimentSpec& spec) {
    require(spec.size_min <= spec.size_max, "experiment: size-min must not exceed size-max");
    std::vector<GeneratedGraph> out;
    const std::string& f = spec.family;
    if (f == "star") {
        require(spec.size_min >= 1, "experiment: star sizes start at 1");
        for (int n = spec.size_min; n <= spec.size_max; ++n) out.push_back(make_star(n));
    } else if (f == "path") {
        require(spec.size_min >= 2, "experiment: path sizes start at 2");
        for (int n = spec.size_min; n <= spec.size_max; ++n) out.push_back(make_path(n));
    } else if (f == "cycle") {
        require(spec.size_min >= 3, "experiment: cycle sizes start at 3");
        for (int n = spec.size_min; n <= spec.size_max; ++n) out.push_back(make_cycle(n));
    } else if (f == "complete") {
        require(spec.size_min >= 2, "experiment: complete-graph sizes start at 2");
        for (int n = spec.size_min; n <= spec.size_max; ++n) out.push_back(make_complete(n));
    } else if (f == "binary-tree") {
        require(spec.size_min >= 1 && spec.size_max <= 12, "experiment: tree heights must be in 1..12");
        bool dyadic = spec.profile == LengthProfile::dyadic_decay;
        for (int h = spec.size_min; h <= spec.size_max; ++h) out.push_back(make_binary_tree(h, dyadic));
    } else if (f == "random-planar") {
        require(spec.count >= 1, "experiment: need at least one random instance");
        require(spec.size_min >= 4, "experiment: random planar sizes start at 4");
        Rng rng(spec.seed);
        for (int i = 0; i < spec.count; ++i) {
            int n = rng.uniform_int(spec.size_min, spec.size_max);
            out.push_back(make_random_planar(n, rng.raw()));
        }
    } else if (f == "random-connected") {
        require(spec.count >= 1, "experiment: need at least one random instance");
        require(spec.size_max >= 2, "experiment: random connected sizes start at 2");
        Rng rng(spec.seed);
        for (int i = 0; i < spec.count; ++i) {
            MetricGraph m = make_random_connected(spec.size_max, 3 * spec.size_max, spec.profile, rng);
            // No embedding is constructed, so the genus field carries the
            // cycle-space upper bound ceil(beta/2) for the orientable genus.
            int genus = (m.graph().betti() + 1) / 2;
            std::string name = "random-" + std::to_string(i) + "-s" + std::to_string(spec.seed);
            out.push_back({std::move(m), std::nullopt, genus, std::move(name)});
        }
    } else if (f == "file") {
        require(!spec.input_path.empty(), "experiment: the file family needs an input path");
        GraphInput input = load_graph(spec.input_path);
        // Genus -1 marks "unknown": bounds that need it refuse to run rather
        // than guessing.
        int genus = -1;
        if (input.embedding) genus = input.embedding->genus();
        else if (input.declared_genus) genus = *input.declared_genus;
        std::string name = spec.input_path;
        if (std::size_t slash = name.find_last_of("/\\"); slash != std::string::npos)
            name = name.substr(slash + 1);
        if (name.size() > 5 && name.ends_with(".json")) name = name.substr(0, name.size() - 5);
        out.push_back({input.metric(), std::move(input.embedding), genus, std::move(name)});
    } else {
        fail("unknown family '" + f +
             "' (expected star, path, cycle, complete, binary-tree, random-planar, random-connected or "
             "file)");
    }
    return out;
}

}  // namespace

BoundReport evaluate_bound(const std::string& bound_id, const GeneratedGraph& g, int k) {
    const MetricGraph& metric = g.metric;
    const CombinatorialGraph& graph = metric.graph();
    bool planar = attested_planar(g);
    bool genus_bound = bound_id == "normalized-genus" || bound_id == "metric-genus" || bound_id == "betti-genus";
    if (genus_bound)
        require(g.genus >= 0, "bound '" + bound_id + "' needs an embedding or a declared genus");
    if (bound_id == "spielman-teng") return bound_spielman_teng(unit_weights(graph), planar);
    if (bound_id == "weighted-planar") return bound_weighted_planar(comparison_weights(metric), planar);
    if (bound_id == "metric-planar") return bound_metric_planar(metric, planar);
    if (bound_id == "comparison") return bound_comparison(metric);
    if (bound_id == "normalized-genus")
        return bound_normalized_genus(graph, std::vector<double>(graph.num_edges(), 1.0), g.genus, k);
    if (bound_id == "metric-genus") return bound_metric_genus(metric, g.genus, k);
    if (bound_id == "betti-genus") return bound_betti_genus(metric, g.genus, k);
    if (bound_id == "tree-diameter") return bound_tree_diameter(metric);
    fail("unknown bound id '" + bound_id +
         "' (expected spielman-teng, weighted-planar, metric-planar, comparison, normalized-genus, "
         "metric-genus, betti-genus or tree-diameter)");
}

std::vector<std::string> default_bounds(const GeneratedGraph& g) {
    std::vector<std::string> ids = {"comparison", "metric-planar", "spielman-teng", "weighted-planar"};
    if (g.metric.graph().betti() == 0) ids.push_back("tree-diameter");
    return ids;
}

std::vector<LabeledReport> run_family_bounds(const ExperimentSpec& spec) {
    std::vector<GeneratedGraph> instances = generate_instances(spec);

    struct Task {
        std::size_t instance;
        std::string bound_id;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::vector<std::string> ids = spec.bound_ids.empty() ? default_bounds(instances[i]) : spec.bound_ids;
        for (std::string& id : ids) tasks.push_back({i, std::move(id)});
    }

    std::vector<BoundReport> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    auto work = [&](std::size_t t) {
        try {
            results[t] = evaluate_bound(tasks[t].bound_id, instances[tasks[t].instance], spec.k);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    int jobs = std::max(1, std::min(spec.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) work(t);
            });
        for (std::thread& th : pool) th.join();
    }
    // Rethrow the first failure in task order so the outcome does not depend
    // on thread scheduling.
    for (std::size_t t = 0; t < tasks.size(); ++t)
        if (errors[t]) std::rethrow_exception(errors[t]);

    std::vector<LabeledReport> out;
    out.reserve(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t)
        out.push_back({instances[tasks[t].instance].name, std::move(results[t])});
    return out;
}

std::vector<LabeledReport> star_sweep_report() {
    std::vector<LabeledReport> out;
    for (int n = 3; n <= 8; ++n) {
        GeneratedGraph g = make_star(n, 1.0 / n);  // total length 1
        BoundReport r = bound_comparison(g.metric);
        if (r.ratio >= r.constant * (1 - 1e-6)) r.note += " (sharp)";
        out.push_back({std::move(g.name), std::move(r)});
    }
    return out;
}

std::vector<LabeledReport> k4_weight_sweep_report() {
    std::vector<LabeledReport> out;
    for (double a : {1.0, 10.0, 100.0}) {
        GeneratedGraph g = make_complete(4);
        const CombinatorialGraph& graph = g.metric.graph();
        std::vector<double> m(graph.num_vertices(), 1.0);
        m[0] = a;
        WeightedGraph w(graph, std::move(m), std::vector<double>(graph.num_edges(), 1.0));
        out.push_back({g.name + "[m(v0)=" + fmt_double(a) + "]", bound_weighted_planar(w, true)});
    }
    return out;
}

std::vector<LabeledReport> binary_tree_table(int h_min, int h_max) {
    require(h_min >= 1 && h_min <= h_max && h_max <= 12, "tree table: heights must be in 1..12");
    std::vector<LabeledReport> out;
    for (int h = h_min; h <= h_max; ++h)
        for (bool dyadic : {false, true}) {
            GeneratedGraph g = make_binary_tree(h, dyadic);
            out.push_back({g.name, bound_tree_diameter(g.metric)});
            out.push_back({g.name, bound_metric_planar(g.metric, true)});
        }
    return out;
}

std::string reports_to_csv(const std::vector<LabeledReport>& reports) {
    std::string out = "instance,bound_id,k,lhs,rhs,ratio,verdict,constant,hypothesis_ok\n";
    for (const LabeledReport& r : reports) out += r.instance + "," + detail::bound_report_csv_row(r.report) + "\n";
    return out;
}

std::string reports_to_json(const std::vector<LabeledReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LabeledReport& r : reports) {
        nlohmann::json row = detail::bound_report_json(r.report);
        row["instance"] = r.instance;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

int worst_exit_code(const std::vector<LabeledReport>& reports) {
    for (const LabeledReport& r : reports)
        if (r.report.verdict == Verdict::violated) return 2;
    return 0;
}

int run_experiment(const ExperimentSpec& spec) {
    require(spec.format == "csv" || spec.format == "json", "experiment: format must be csv or json");

    std::vector<LabeledReport> reports;
    if (spec.family == "star-sweep") {
        reports = star_sweep_report();
    } else if (spec.family == "k4-sweep") {
        reports = k4_weight_sweep_report();
    } else if (spec.family == "tree-table") {
        reports = binary_tree_table(3, 6);
    } else {
        reports = run_family_bounds(spec);
    }

    std::string rendered = spec.format == "json" ? reports_to_json(reports) : reports_to_csv(reports);
    if (spec.output_path.empty()) {
        std::cout << rendered;
    } else {
        write_text_file(spec.output_path, rendered);
    }

    for (const LabeledReport& r : reports)
        if (r.report.verdict == Verdict::violated)
            log_warn("violated: ", r.instance, " ", r.report.bound_id, " lhs=", fmt_double(r.report.lhs),
                     " rhs=", fmt_double(r.report.rhs));
    int code = worst_exit_code(reports);
    log_info("experiment '", spec.family, "': ", reports.size(), " rows, exit code ", code);
    return code;
}

}  // namespace qgs
