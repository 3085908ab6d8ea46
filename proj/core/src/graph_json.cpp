#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgs/error.hpp"
#include "qgs/graph_json.hpp"

namespace qgs {

namespace {

using nlohmann::json;

double positive_number(const json& j, const std::string& what) {
    require(j.is_number(), what + " must be a number");
    double x = j.get<double>();
    require(x > 0, what + " must be positive");
    return x;
}

}  // namespace

GraphInput parse_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    require(j.is_object(), "graph file: top level must be an object");
    require(j.contains("vertices") && j["vertices"].is_array(), "graph file: 'vertices' array required");
    require(j.contains("edges") && j["edges"].is_array(), "graph file: 'edges' array required");

    std::vector<std::string> vertex_ids;
    std::vector<std::pair<std::string, double>> vertex_m;
    for (const json& v : j["vertices"]) {
        require(v.is_object() && v.contains("id") && v["id"].is_string(),
                "graph file: each vertex needs a string 'id'");
        std::string id = v["id"].get<std::string>();
        vertex_ids.push_back(id);
        if (v.contains("m")) vertex_m.emplace_back(id, positive_number(v["m"], "vertex weight m"));
    }

    struct EdgeAttrs {
        std::optional<double> length, mu, omega;
    };
    std::vector<EdgeSpec> edge_specs;
    std::vector<std::pair<std::string, EdgeAttrs>> edge_attrs;
    for (const json& e : j["edges"]) {
        require(e.is_object() && e.contains("id") && e["id"].is_string() && e.contains("source") &&
                    e["source"].is_string() && e.contains("target") && e["target"].is_string(),
                "graph file: each edge needs string 'id', 'source' and 'target'");
        EdgeSpec spec{e["id"].get<std::string>(), e["source"].get<std::string>(),
                      e["target"].get<std::string>()};
        require(!spec.id.empty() && spec.id[0] != '-',
                "graph file: edge id '" + spec.id + "' must not start with '-'");
        EdgeAttrs attrs;
        if (e.contains("length")) attrs.length = positive_number(e["length"], "edge length");
        if (e.contains("mu")) attrs.mu = positive_number(e["mu"], "edge weight mu");
        if (e.contains("omega")) attrs.omega = positive_number(e["omega"], "edge weight omega");
        edge_attrs.emplace_back(spec.id, attrs);
        edge_specs.push_back(std::move(spec));
    }

    GraphInput in{CombinatorialGraph::multigraph(vertex_ids, edge_specs)};
    int nv = in.graph.num_vertices(), ne = in.graph.num_edges();
    in.m.assign(nv, 1.0);
    in.mu.assign(ne, 1.0);
    in.omega.assign(ne, 1.0);
    in.lengths.assign(ne, 1.0);
    for (const auto& [id, value] : vertex_m) {
        in.m[in.graph.vertex_index(id)] = value;
        in.has_m = true;
    }
    for (const auto& [id, attrs] : edge_attrs) {
        int e = in.graph.edge_index(id);
        if (attrs.length) {
            in.lengths[e] = *attrs.length;
            in.has_lengths = true;
        }
        if (attrs.mu) {
            in.mu[e] = *attrs.mu;
            in.has_mu = true;
        }
        if (attrs.omega) {
            in.omega[e] = *attrs.omega;
            in.has_omega = true;
        }
    }

    if (j.contains("embedding")) {
        const json& emb = j["embedding"];
        require(emb.is_object(), "graph file: 'embedding' must be an object");
        require(emb.contains("genus") && emb["genus"].is_number_integer(),
                "graph file: embedding needs an integer 'genus'");
        int genus = emb["genus"].get<int>();
        require(genus >= 0, "graph file: genus must be nonnegative");
        in.declared_genus = genus;
        if (emb.contains("faces")) {
            require(emb["faces"].is_array(), "graph file: 'faces' must be an array of face walks");
            std::vector<std::vector<FaceStep>> faces;
            for (const json& face : emb["faces"]) {
                require(face.is_array(), "graph file: each face must be an array of signed edge ids");
                std::vector<FaceStep> walk;
                for (const json& s : face) {
                    require(s.is_string(), "graph file: face entries must be signed edge id strings");
                    std::string step = s.get<std::string>();
                    bool forward = true;
                    if (!step.empty() && step[0] == '-') {
                        forward = false;
                        step = step.substr(1);
                    }
                    int e = in.graph.edge_index(step);
                    require(e >= 0, "graph file: face references unknown edge '" + step + "'");
                    walk.push_back({e, forward});
                }
                faces.push_back(std::move(walk));
            }
            in.embedding = PlanarEmbedding(in.graph, faces, genus);
        }
    }
    return in;
}

GraphInput load_graph(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::string graph_to_json(const CombinatorialGraph& g, const GraphJsonFields& fields) {
    json vertices = json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        json row = {{"id", g.vertex_id(v)}};
        if (fields.m) row["m"] = (*fields.m)[v];
        vertices.push_back(row);
    }
    json edges = json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        json row = {{"id", ed.id}, {"source", g.vertex_id(ed.u)}, {"target", g.vertex_id(ed.v)}};
        if (fields.lengths) row["length"] = (*fields.lengths)[e];
        if (fields.mu) row["mu"] = (*fields.mu)[e];
        if (fields.omega) row["omega"] = (*fields.omega)[e];
        edges.push_back(row);
    }
    json out = {{"vertices", vertices}, {"edges", edges}};
    if (fields.embedding) {
        json faces = json::array();
        for (const auto& walk : fields.embedding->faces()) {
            json face = json::array();
            for (const FaceStep& s : walk)
                face.push_back(s.forward ? g.edge(s.edge).id : "-" + g.edge(s.edge).id);
            faces.push_back(face);
        }
        out["embedding"] = {{"genus", fields.embedding->genus()}, {"faces", faces}};
    } else if (fields.genus) {
        out["embedding"] = {{"genus", *fields.genus}};
    }
    return out.dump(2) + "\n";
}

std::string packing_to_json(const CirclePacking& packing, const BalanceState* state) {
    json caps = json::array();
    for (std::size_t i = 0; i < packing.caps.size(); ++i) {
        const SphericalCap& c = packing.caps[i];
        caps.push_back({{"vertex", packing.labels[i]},
                        {"p", {c.p.x(), c.p.y(), c.p.z()}},
                        {"r", c.r},
                        {"aux", static_cast<bool>(packing.aux[i])}});
    }
    json residuals = {{"tangency", packing.max_tangency_residual()},
                      {"univalence_margin", packing.min_univalence_margin()},
                      {"total_area", packing.total_area()}};
    json alpha = {0.0, 0.0, 0.0};
    if (state) {
        residuals["balance"] = state->residual;
        residuals["epsilon"] = state->epsilon;
        residuals["delta"] = state->delta;
        residuals["all_weights_one"] = state->all_weights_one;
        alpha = {state->alpha.x(), state->alpha.y(), state->alpha.z()};
    }
    json out = {{"caps", caps}, {"residuals", residuals}, {"alpha", alpha}};
    return out.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    require(!in.bad(), "error while reading '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    require(out.good(), "error while writing '" + path + "'");
}

}  // namespace qgs
