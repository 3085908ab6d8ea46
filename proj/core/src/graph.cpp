#include "qgs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace qgs {

// --- CombinatorialGraph ------------------------------------------------------

CombinatorialGraph CombinatorialGraph::simple(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges) {
    return build(std::move(vertex_ids), std::move(edges), true);
}

CombinatorialGraph CombinatorialGraph::multigraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges) {
    return build(std::move(vertex_ids), std::move(edges), false);
}

CombinatorialGraph CombinatorialGraph::build(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges,
                                             bool require_simple) {
    require(!vertex_ids.empty(), "graph: needs at least one vertex");
    std::sort(vertex_ids.begin(), vertex_ids.end());
    for (size_t i = 1; i < vertex_ids.size(); ++i)
        require(vertex_ids[i] != vertex_ids[i - 1], "graph: duplicate vertex id '" + vertex_ids[i] + "'");

    std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges.size(); ++i)
        require(edges[i].id != edges[i - 1].id, "graph: duplicate edge id '" + edges[i].id + "'");

    CombinatorialGraph g;
    g.vertex_ids_ = std::move(vertex_ids);
    g.edges_.reserve(edges.size());
    g.edge_ids_.reserve(edges.size());
    g.inc_.assign(g.vertex_ids_.size(), {});

    auto vidx = [&](const std::string& id) {
        auto it = std::lower_bound(g.vertex_ids_.begin(), g.vertex_ids_.end(), id);
        require(it != g.vertex_ids_.end() && *it == id, "graph: edge endpoint '" + id + "' is not a vertex");
        return static_cast<int>(it - g.vertex_ids_.begin());
    };

    std::set<std::pair<int, int>> seen_pairs;
    g.simple_ = true;
    for (auto& es : edges) {
        Edge e;
        e.id = es.id;
        e.u = vidx(es.source);
        e.v = vidx(es.target);
        if (e.loop()) g.simple_ = false;
        auto key = std::minmax(e.u, e.v);
        if (!seen_pairs.insert({key.first, key.second}).second) g.simple_ = false;
        int idx = static_cast<int>(g.edges_.size());
        g.inc_[e.u].push_back({idx, 0});
        g.inc_[e.v].push_back({idx, 1});
        g.edge_ids_.push_back(e.id);
        g.edges_.push_back(std::move(e));
    }
    if (require_simple)
        require(g.simple_, "graph: loops/parallel edges are not allowed here");

    // connectivity (vertex count 1 with no edges is fine)
    std::vector<char> seen(g.vertex_ids_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& inc : g.inc_[v]) {
            const Edge& e = g.edges_[inc.edge];
            int w = (inc.end == 0) ? e.v : e.u;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    require(reached == g.num_vertices(), "graph: not connected");
    return g;
}

int CombinatorialGraph::vertex_index(const std::string& id) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id) return -1;
    return static_cast<int>(it - vertex_ids_.begin());
}

int CombinatorialGraph::edge_index(const std::string& id) const {
    auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
    if (it == edge_ids_.end() || *it != id) return -1;
    return static_cast<int>(it - edge_ids_.begin());
}

int CombinatorialGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> CombinatorialGraph::adjacent_pairs() const {
    std::set<std::pair<int, int>> pairs;
    for (const Edge& e : edges_) {
        auto key = std::minmax(e.u, e.v);
        pairs.insert({key.first, key.second});
    }
    return {pairs.begin(), pairs.end()};
}

// --- WeightedGraph -----------------------------------------------------------

WeightedGraph::WeightedGraph(CombinatorialGraph graph, std::vector<double> m, std::vector<double> mu)
    : graph_(std::move(graph)), m_(std::move(m)), mu_(std::move(mu)) {
    require(graph_.is_simple(), "weighted graph: underlying graph must be simple");
    require(static_cast<int>(m_.size()) == graph_.num_vertices(), "weighted graph: one measure per vertex required");
    require(static_cast<int>(mu_.size()) == graph_.num_edges(), "weighted graph: one conductance per edge required");
    for (double x : m_) require(x > 0.0 && std::isfinite(x), "weighted graph: vertex measures must be positive");
    for (double x : mu_) require(x > 0.0 && std::isfinite(x), "weighted graph: conductances must be positive");
}

double WeightedGraph::total_measure() const {
    double s = 0;
    for (double x : m_) s += x;
    return s;
}

double WeightedGraph::weighted_degree(int v) const {
    double s = 0;
    for (const auto& inc : graph_.incidences(v)) s += mu_[inc.edge];
    return s;
}

double WeightedGraph::max_weighted_degree() const {
    double d = 0;
    for (int v = 0; v < graph_.num_vertices(); ++v) d = std::max(d, weighted_degree(v));
    return d;
}

// --- MetricGraph -------------------------------------------------------------

MetricGraph::MetricGraph(CombinatorialGraph graph, std::vector<double> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
    require(static_cast<int>(lengths_.size()) == graph_.num_edges(), "metric graph: one length per edge required");
    require(graph_.num_edges() > 0, "metric graph: needs at least one edge");
    for (double l : lengths_) require(l > 0.0 && std::isfinite(l), "metric graph: lengths must be positive");
}

double MetricGraph::total_length() const {
    double s = 0;
    for (double l : lengths_) s += l;
    return s;
}

double MetricGraph::min_length() const { return *std::min_element(lengths_.begin(), lengths_.end()); }
double MetricGraph::max_length() const { return *std::max_element(lengths_.begin(), lengths_.end()); }

double MetricGraph::metric_degree(int v) const {
    double s = 0;
    for (const auto& inc : graph_.incidences(v)) s += lengths_[inc.edge];
    return s;
}

double MetricGraph::inverse_length_degree(int v) const {
    double s = 0;
    for (const auto& inc : graph_.incidences(v)) s += 1.0 / lengths_[inc.edge];
    return s;
}

double MetricGraph::max_metric_degree() const {
    double d = 0;
    for (int v = 0; v < graph_.num_vertices(); ++v) d = std::max(d, metric_degree(v));
    return d;
}

double MetricGraph::max_inverse_length_degree() const {
    double d = 0;
    for (int v = 0; v < graph_.num_vertices(); ++v) d = std::max(d, inverse_length_degree(v));
    return d;
}

bool MetricGraph::equilateral(double rel_tol) const {
    double lo = min_length(), hi = max_length();
    return hi - lo <= rel_tol * hi;
}

// --- PlanarEmbedding ---------------------------------------------------------

PlanarEmbedding::PlanarEmbedding(const CombinatorialGraph& graph, std::vector<std::vector<FaceStep>> faces, int genus)
    : faces_(std::move(faces)), genus_(genus) {
    require(genus_ >= 0, "embedding: genus must be non-negative");
    std::vector<int> fwd(graph.num_edges(), 0), bwd(graph.num_edges(), 0);
    for (const auto& walk : faces_) {
        require(!walk.empty(), "embedding: empty face walk");
        for (size_t i = 0; i < walk.size(); ++i) {
            const FaceStep& s = walk[i];
            require(s.edge >= 0 && s.edge < graph.num_edges(), "embedding: face walk references unknown edge");
            (s.forward ? fwd : bwd)[s.edge] += 1;
            // vertex continuity: head of step i must equal tail of step i+1
            const FaceStep& t = walk[(i + 1) % walk.size()];
            const Edge& es = graph.edge(s.edge);
            const Edge& et = graph.edge(t.edge);
            int head = s.forward ? es.v : es.u;
            int tail = t.forward ? et.u : et.v;
            require(head == tail, "embedding: face walk is not vertex-continuous");
        }
    }
    for (int e = 0; e < graph.num_edges(); ++e) {
        require(fwd[e] == 1 && bwd[e] == 1,
                "embedding: edge '" + graph.edge(e).id + "' must be traversed exactly once in each direction");
    }
    int euler = graph.num_vertices() - graph.num_edges() + num_faces();
    require(euler == 2 - 2 * genus_, "embedding: Euler relation |V|-|E|+|F| = 2-2g fails");
}

int PlanarEmbedding::walk_vertex(const CombinatorialGraph& g, int f, int i) const {
    const FaceStep& s = faces_[f][i];
    const Edge& e = g.edge(s.edge);
    return s.forward ? e.u : e.v;
}

// --- subdivision -------------------------------------------------------------

namespace {

// Deterministic fresh id: base, prefixed by '_' until it collides with nothing.
std::string fresh_id(std::set<std::string>& taken, std::string base) {
    while (taken.count(base)) base.insert(base.begin(), '_');
    taken.insert(base);
    return base;
}

}  // namespace

MetricSubdivision subdivide_metric(const MetricGraph& g, const std::vector<int>& parts) {
    const CombinatorialGraph& cg = g.graph();
    require(static_cast<int>(parts.size()) == cg.num_edges(), "subdivide: one part count per edge required");
    for (int p : parts) require(p >= 1, "subdivide: part counts must be >= 1");

    std::set<std::string> taken(cg.vertex_ids().begin(), cg.vertex_ids().end());
    std::set<std::string> taken_edges;

    std::vector<std::string> vertex_ids(cg.vertex_ids());
    std::vector<std::string> added;
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<std::string, double>> new_lengths;  // edge id -> length

    for (int e = 0; e < cg.num_edges(); ++e) {
        const Edge& ed = cg.edge(e);
        int p = parts[e];
        double seg = g.length(e) / p;
        std::string prev = cg.vertex_id(ed.u);
        for (int i = 1; i < p; ++i) {
            std::string mid = fresh_id(taken, ed.id + ".v" + std::to_string(i));
            vertex_ids.push_back(mid);
            added.push_back(mid);
            std::string eid = fresh_id(taken_edges, ed.id + ".s" + std::to_string(i));
            edges.push_back({eid, prev, mid});
            new_lengths.push_back({eid, seg});
            prev = mid;
        }
        std::string eid = p == 1 ? ed.id : fresh_id(taken_edges, ed.id + ".s" + std::to_string(p));
        if (p == 1) taken_edges.insert(eid);
        edges.push_back({eid, prev, cg.vertex_id(ed.v)});
        new_lengths.push_back({eid, seg});
    }

    CombinatorialGraph sub = CombinatorialGraph::multigraph(vertex_ids, edges);
    std::vector<double> lengths(sub.num_edges());
    for (const auto& [id, len] : new_lengths) lengths[sub.edge_index(id)] = len;

    return {MetricGraph(std::move(sub), std::move(lengths)), cg.vertex_ids(), std::move(added), parts};
}

MetricSubdivision subdivide_metric(const MetricGraph& g, int parts_everywhere) {
    return subdivide_metric(g, std::vector<int>(g.graph().num_edges(), parts_everywhere));
}

MetricGraph make_simple(const MetricGraph& g) {
    if (g.graph().is_simple()) return g;
    const CombinatorialGraph& cg = g.graph();
    std::map<std::pair<int, int>, int> pair_count;
    for (const Edge& e : cg.edges()) {
        auto key = std::minmax(e.u, e.v);
        pair_count[{key.first, key.second}] += 1;
    }
    std::vector<int> parts(cg.num_edges(), 1);
    for (int e = 0; e < cg.num_edges(); ++e) {
        const Edge& ed = cg.edge(e);
        if (ed.loop()) {
            parts[e] = 3;  // a loop needs three segments to avoid parallel halves
        } else {
            auto key = std::minmax(ed.u, ed.v);
            if (pair_count[{key.first, key.second}] > 1) parts[e] = 2;
        }
    }
    return subdivide_metric(g, parts).graph;
}

CombinatorialSubdivision subdivide_combinatorial(const CombinatorialGraph& g, const std::vector<double>& omega) {
    require(g.is_simple(), "subdivide: combinatorial subdivision expects a simple graph");
    require(static_cast<int>(omega.size()) == g.num_edges(), "subdivide: one conductance per edge required");

    std::set<std::string> taken(g.vertex_ids().begin(), g.vertex_ids().end());
    std::set<std::string> taken_edges;
    std::vector<std::string> vertex_ids(g.vertex_ids());
    std::vector<std::string> added;
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<std::string, double>> w;

    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        std::string mid = fresh_id(taken, ed.id + ".v");
        vertex_ids.push_back(mid);
        added.push_back(mid);
        std::string h1 = fresh_id(taken_edges, ed.id + ".a");
        std::string h2 = fresh_id(taken_edges, ed.id + ".b");
        edges.push_back({h1, g.vertex_id(ed.u), mid});
        edges.push_back({h2, mid, g.vertex_id(ed.v)});
        w.push_back({h1, omega[e]});
        w.push_back({h2, omega[e]});
    }

    CombinatorialGraph sub = CombinatorialGraph::simple(vertex_ids, edges);
    std::vector<double> om(sub.num_edges());
    for (const auto& [id, x] : w) om[sub.edge_index(id)] = x;
    return {std::move(sub), std::move(om), g.vertex_ids(), std::move(added)};
}

BettiSubdivision betti_subdivision(const MetricGraph& g, int k) {
    int beta = g.graph().betti();
    double L = g.total_length();
    double lmin = g.min_length();
    // k >= L/l_min - beta + 1 guarantees every edge is cut at least twice
    require(static_cast<double>(k) >= L / lmin - beta + 1 - 1e-12,
            "betti subdivision: k must be at least L/l_min - beta + 1");
    int n = k + beta - 1;
    require(n >= 1, "betti subdivision: k + beta - 1 must be positive");

    std::vector<int> segments(g.graph().num_edges());
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        double t = n * g.length(e) / L;
        // snap to the intended integer when rounding noise puts t just below it
        double r = std::round(t);
        if (std::abs(t - r) <= 1e-9 * std::max(1.0, std::abs(t))) t = r;
        // unique integer with m - 1 <= t < m
        int m = static_cast<int>(std::floor(t)) + 1;
        segments[e] = m;
        require(m >= 2, "betti subdivision: internal error, segment count below 2");
    }
    return {subdivide_metric(g, segments), n, segments};
}

// --- hypothesis checks -------------------------------------------------------

std::vector<std::string> check_vertex_weight_condition(const WeightedGraph& g) {
    std::vector<std::string> bad;
    double total = g.total_measure();
    const auto& m = g.vertex_measure();
    for (const Edge& e : g.graph().edges()) {
        if (2.0 * (m[e.u] + m[e.v]) >= total) bad.push_back(e.id);
    }
    return bad;
}

std::vector<std::pair<std::string, std::string>> check_metric_condition(const MetricGraph& g) {
    std::vector<std::pair<std::string, std::string>> bad;
    double L = g.total_length();
    for (auto [u, v] : g.graph().adjacent_pairs()) {
        if (g.metric_degree(u) + g.metric_degree(v) >= L)
            bad.push_back({g.graph().vertex_id(u), g.graph().vertex_id(v)});
    }
    return bad;
}

// --- distances ----------------------------------------------------------------

std::vector<double> vertex_distances(const MetricGraph& g, int s) {
    const CombinatorialGraph& cg = g.graph();
    std::vector<double> dist(cg.num_vertices(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.push({0.0, s});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (const auto& inc : cg.incidences(v)) {
            const Edge& e = cg.edge(inc.edge);
            int w = (inc.end == 0) ? e.v : e.u;
            double nd = d + g.length(inc.edge);
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist;
}

double tree_diameter(const MetricGraph& g) {
    require(g.graph().betti() == 0, "tree diameter: graph has cycles");
    const CombinatorialGraph& cg = g.graph();
    if (cg.num_edges() == 1) return g.length(0);
    std::vector<int> leaves;
    for (int v = 0; v < cg.num_vertices(); ++v)
        if (cg.degree(v) == 1) leaves.push_back(v);
    double diam = 0;
    for (int l : leaves) {
        auto dist = vertex_distances(g, l);
        for (int o : leaves) diam = std::max(diam, dist[o]);
    }
    return diam;
}

}  // namespace qgs
