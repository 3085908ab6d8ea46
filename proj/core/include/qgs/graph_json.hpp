#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgs/graph.hpp"
#include "qgs/packing.hpp"

namespace qgs {

// Graph file contents.  Schema:
//   { "vertices": [{"id", "m"?}],
//     "edges":    [{"id", "source", "target", "length"?, "mu"?, "omega"?}],
//     "embedding"?: {"genus", "faces"?: [["e1", "-e1", ...], ...]} }
// Face walks list signed edge ids: "e" traverses source->target, "-e" the
// reverse.  Absent attributes default to 1; the has_* flags record presence.
struct GraphInput {
    explicit GraphInput(CombinatorialGraph g) : graph(std::move(g)) {}

    CombinatorialGraph graph;
    std::vector<double> m;
    std::vector<double> mu;
    std::vector<double> omega;
    std::vector<double> lengths;
    bool has_m = false;
    bool has_mu = false;
    bool has_omega = false;
    bool has_lengths = false;
    std::optional<PlanarEmbedding> embedding;
    std::optional<int> declared_genus;  // present when "embedding" carried a genus

    MetricGraph metric() const { return MetricGraph(graph, lengths); }
    WeightedGraph weighted() const { return WeightedGraph(graph, m, mu); }
};

GraphInput parse_graph_json(const std::string& text);
GraphInput load_graph(const std::string& path);

// Serialization; null/empty members are omitted from the output.
struct GraphJsonFields {
    const std::vector<double>* m = nullptr;
    const std::vector<double>* mu = nullptr;
    const std::vector<double>* omega = nullptr;
    const std::vector<double>* lengths = nullptr;
    const PlanarEmbedding* embedding = nullptr;
    std::optional<int> genus;  // written even when no face data is available
};

std::string graph_to_json(const CombinatorialGraph& g, const GraphJsonFields& fields = {});

// Packing file: {"caps": [{"vertex", "p": [x,y,z], "r", "aux"}], "residuals":
// {...}, "alpha": [x,y,z]}.  `state` adds the balancing diagnostics.
std::string packing_to_json(const CirclePacking& packing, const BalanceState* state = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qgs
