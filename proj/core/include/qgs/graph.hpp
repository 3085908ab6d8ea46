#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgs/error.hpp"

namespace qgs {

// Vertex and edge ids are opaque strings supplied by the caller.  Internally
// vertices and edges are addressed by dense indices assigned in lexicographic
// id order, which keeps every derived artifact (matrices, CSV rows, reports)
// deterministic for a given input.

struct EdgeSpec {
    std::string id;
    std::string source;
    std::string target;
};

struct Edge {
    std::string id;
    int u = -1;  // index of source vertex
    int v = -1;  // index of target vertex
    bool loop() const { return u == v; }
};

// One endpoint of an edge as seen from a vertex: `end == 0` means the vertex
// is the edge's source, `end == 1` its target.  A loop contributes two
// incidences at its vertex, so degrees count loops twice.
struct Incidence {
    int edge = -1;
    int end = 0;
};

class CombinatorialGraph {
public:
    // `simple` rejects loops and parallel edges, `multigraph` permits them.
    // Both require at least one vertex, unique ids, known endpoints and a
    // connected edge set.
    static CombinatorialGraph simple(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);
    static CombinatorialGraph multigraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int betti() const { return num_edges() - num_vertices() + 1; }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }

    int vertex_index(const std::string& id) const;           // -1 if unknown
    int edge_index(const std::string& id) const;             // -1 if unknown
    const std::vector<Incidence>& incidences(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }
    int max_degree() const;

    bool is_simple() const { return simple_; }
    // Distinct unordered vertex pairs joined by at least one edge; a loop
    // yields the pair (v, v).
    std::vector<std::pair<int, int>> adjacent_pairs() const;

private:
    CombinatorialGraph() = default;
    static CombinatorialGraph build(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges,
                                    bool require_simple);

    std::vector<std::string> vertex_ids_;  // sorted
    std::vector<Edge> edges_;              // sorted by id
    std::vector<std::string> edge_ids_;    // sorted, parallel to edges_
    std::vector<std::vector<Incidence>> inc_;
    bool simple_ = true;
};

// Vertex measure m > 0 and edge conductance mu > 0 on a simple graph.  The
// quadratic form is q(f) = sum_e mu(e) |f(u) - f(v)|^2 against the weighted
// inner product sum_v m(v) |f(v)|^2.
class WeightedGraph {
public:
    WeightedGraph(CombinatorialGraph graph, std::vector<double> m, std::vector<double> mu);

    const CombinatorialGraph& graph() const { return graph_; }
    const std::vector<double>& vertex_measure() const { return m_; }
    const std::vector<double>& conductance() const { return mu_; }
    double total_measure() const;                 // m(V)
    double weighted_degree(int v) const;          // sum of mu over incident edges
    double max_weighted_degree() const;

private:
    CombinatorialGraph graph_;
    std::vector<double> m_;
    std::vector<double> mu_;
};

// Positive edge lengths on a (possibly non-simple) connected graph.
class MetricGraph {
public:
    MetricGraph(CombinatorialGraph graph, std::vector<double> lengths);

    const CombinatorialGraph& graph() const { return graph_; }
    const std::vector<double>& lengths() const { return lengths_; }
    double length(int e) const { return lengths_[e]; }
    double total_length() const;
    double min_length() const;
    double max_length() const;
    double metric_degree(int v) const;        // sum of lengths of incident edges (loops twice)
    double inverse_length_degree(int v) const;  // sum of 1/length (loops twice)
    double max_metric_degree() const;
    double max_inverse_length_degree() const;
    bool equilateral(double rel_tol = 1e-12) const;

private:
    CombinatorialGraph graph_;
    std::vector<double> lengths_;
};

// An embedding of the graph into a closed oriented surface, given as the
// closed facial walks.  A walk entry (edge, forward) traverses the edge from
// source to target when forward is true.  Validation requires every edge to
// be traversed exactly twice, once in each direction (possibly both within
// one walk), every walk to be vertex-continuous, and the Euler relation
// |V| - |E| + |F| = 2 - 2g to hold.
struct FaceStep {
    int edge = -1;
    bool forward = true;
};

class PlanarEmbedding {
public:
    PlanarEmbedding(const CombinatorialGraph& graph, std::vector<std::vector<FaceStep>> faces, int genus);

    const std::vector<std::vector<FaceStep>>& faces() const { return faces_; }
    int genus() const { return genus_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    // Vertex at which step i of face f starts (the tail of the directed edge).
    int walk_vertex(const CombinatorialGraph& g, int f, int i) const;

private:
    std::vector<std::vector<FaceStep>> faces_;
    int genus_ = 0;
};

// --- subdivision -----------------------------------------------------------

struct MetricSubdivision {
    MetricGraph graph;
    std::vector<std::string> original_vertices;
    std::vector<std::string> added_vertices;
    std::vector<int> parts;  // per original edge index
};

// Splits edge e into parts[e] >= 1 equal-length segments, inserting
// parts[e]-1 fresh vertices.  Total length, connectivity and the Betti number
// are preserved exactly.
MetricSubdivision subdivide_metric(const MetricGraph& g, const std::vector<int>& parts);
MetricSubdivision subdivide_metric(const MetricGraph& g, int parts_everywhere);

// Smallest equal-parts subdivision making the graph simple (3 parts on loops,
// 2 on parallel edges).  Returns the input unchanged when already simple.
MetricGraph make_simple(const MetricGraph& g);

struct CombinatorialSubdivision {
    CombinatorialGraph graph;
    std::vector<double> omega;  // conductance per new edge: both halves inherit omega(e)
    std::vector<std::string> original_vertices;
    std::vector<std::string> added_vertices;
};

// Inserts one midpoint vertex per edge; each half keeps the parent edge's
// conductance.
CombinatorialSubdivision subdivide_combinatorial(const CombinatorialGraph& g, const std::vector<double>& omega);

struct BettiSubdivision {
    MetricSubdivision subdivision;
    int n = 0;                 // k + beta - 1
    std::vector<int> segments;  // m_e per original edge
};

// Equalizing subdivision: with n = k + beta - 1, edge e is cut into the unique
// m_e with m_e - 1 <= n l_e / L < m_e, so every new length lies in
// [L/(2n), L/n).  Requires k >= L/l_min - beta + 1, which forces m_e >= 2.
BettiSubdivision betti_subdivision(const MetricGraph& g, int k);

// --- hypothesis checks ------------------------------------------------------

// Edges {u, v} violating 2 (m(u) + m(v)) < m(V); empty result means the
// weighted planar bound applies with its sharp constant.
std::vector<std::string> check_vertex_weight_condition(const WeightedGraph& g);

// Adjacent vertex pairs violating d_u + d_v < L, where d is the metric degree
// (sum of incident edge lengths).  Empty result on a simple graph means the
// metric planar bound applies with constant 2 pi^2.
std::vector<std::pair<std::string, std::string>> check_metric_condition(const MetricGraph& g);

// --- distances --------------------------------------------------------------

// Shortest path distances from vertex s to all vertices along the metric.
std::vector<double> vertex_distances(const MetricGraph& g, int s);

// Diameter of a metric tree (beta == 0); attained between two degree-1
// vertices, so leaf-to-leaf distances suffice.
double tree_diameter(const MetricGraph& g);

}  // namespace qgs
