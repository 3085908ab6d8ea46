#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "qgs/delaunay.hpp"
#include "qgs/error.hpp"
#include "qgs/generators.hpp"
#include "qgs/log.hpp"

namespace qgs {

namespace {

std::string pad_int(int value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%0*d", width, value);
    return buf;
}

int digits(int n) { return n < 10 ? 1 : n < 100 ? 2 : n < 1000 ? 3 : 4; }

PlanarEmbedding cycle_embedding(const CombinatorialGraph& g) {
    int n = g.num_edges();
    std::vector<FaceStep> inner, outer;
    for (int e = 0; e < n; ++e) inner.push_back({e, true});
    for (int e = n - 1; e >= 0; --e) outer.push_back({e, false});
    return PlanarEmbedding(g, {outer, inner}, 0);
}

}  // namespace

LengthProfile parse_length_profile(const std::string& name) {
    if (name == "equilateral") return LengthProfile::equilateral;
    if (name == "dyadic-decay") return LengthProfile::dyadic_decay;
    if (name == "log-uniform") return LengthProfile::log_uniform;
    fail("unknown length profile '" + name + "' (expected equilateral, dyadic-decay or log-uniform)");
}

std::string length_profile_name(LengthProfile p) {
    switch (p) {
        case LengthProfile::equilateral:
            return "equilateral";
        case LengthProfile::dyadic_decay:
            return "dyadic-decay";
        case LengthProfile::log_uniform:
            return "log-uniform";
    }
    return "?";
}

std::vector<FaceStep> tree_face_walk(const CombinatorialGraph& g) {
    require(g.betti() == 0, "tree face walk: graph has cycles");
    std::vector<FaceStep> walk;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        for (const Incidence& inc : g.incidences(v)) {
            if (inc.edge == parent_edge) continue;
            const Edge& ed = g.edge(inc.edge);
            bool forward = inc.end == 0;
            int w = forward ? ed.v : ed.u;
            walk.push_back({inc.edge, forward});
            dfs(w, inc.edge);
            walk.push_back({inc.edge, !forward});
        }
    };
    dfs(0, -1);
    return walk;
}

GeneratedGraph make_star(int n_edges, double edge_length) {
    require(n_edges >= 1, "star: need at least one edge");
    require(edge_length > 0, "star: edge length must be positive");
    int w = digits(n_edges);
    std::vector<std::string> vertices = {"c"};
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n_edges; ++i) {
        vertices.push_back("l" + pad_int(i, w));
        edges.push_back({"e" + pad_int(i, w), "c", "l" + pad_int(i, w)});
    }
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);
    MetricGraph metric(g, std::vector<double>(n_edges, edge_length));
    PlanarEmbedding emb(g, {tree_face_walk(g)}, 0);
    return {std::move(metric), std::move(emb), 0, "star-" + std::to_string(n_edges)};
}

GeneratedGraph make_path(int n_vertices, double edge_length) {
    require(n_vertices >= 2, "path: need at least two vertices");
    require(edge_length > 0, "path: edge length must be positive");
    int w = digits(n_vertices);
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n_vertices; ++i) vertices.push_back("v" + pad_int(i, w));
    for (int i = 0; i + 1 < n_vertices; ++i)
        edges.push_back({"e" + pad_int(i, w), vertices[i], vertices[i + 1]});
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);
    MetricGraph metric(g, std::vector<double>(n_vertices - 1, edge_length));
    PlanarEmbedding emb(g, {tree_face_walk(g)}, 0);
    return {std::move(metric), std::move(emb), 0, "path-" + std::to_string(n_vertices)};
}

GeneratedGraph make_cycle(int n_vertices, double edge_length) {
    require(n_vertices >= 3, "cycle: need at least three vertices");
    require(edge_length > 0, "cycle: edge length must be positive");
    int w = digits(n_vertices - 1);
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n_vertices; ++i) vertices.push_back("v" + pad_int(i, w));
    for (int i = 0; i < n_vertices; ++i)
        edges.push_back({"e" + pad_int(i, w), vertices[i], vertices[(i + 1) % n_vertices]});
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);
    MetricGraph metric(g, std::vector<double>(n_vertices, edge_length));
    return {std::move(metric), cycle_embedding(g), 0, "cycle-" + std::to_string(n_vertices)};
}

GeneratedGraph make_interval(double length) {
    GeneratedGraph g = make_path(2, length);
    g.name = "interval";
    return g;
}

GeneratedGraph make_loop(double length) {
    require(length > 0, "loop: length must be positive");
    CombinatorialGraph g = CombinatorialGraph::multigraph({"v"}, {{"e", "v", "v"}});
    MetricGraph metric(g, {length});
    PlanarEmbedding emb(g, {{{0, true}}, {{0, false}}}, 0);
    return {std::move(metric), std::move(emb), 0, "loop"};
}

GeneratedGraph make_complete(int n, double edge_length) {
    require(n >= 2, "complete graph: need at least two vertices");
    require(edge_length > 0, "complete graph: edge length must be positive");
    int w = digits(n - 1);
    std::vector<std::string> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back("v" + pad_int(i, w));
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({"e" + pad_int(i, w) + "_" + pad_int(j, w), vertices[i], vertices[j]});
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);
    MetricGraph metric(g, std::vector<double>(edges.size(), edge_length));

    GeneratedGraph out{std::move(metric), std::nullopt, 0, "complete-" + std::to_string(n)};
    if (n == 2) {
        out.embedding = PlanarEmbedding(g, {tree_face_walk(g)}, 0);
    } else if (n == 3) {
        out.embedding = cycle_embedding(g);
    } else if (n == 4) {
        auto step = [&](int i, int j) {  // directed step i -> j
            int e = g.edge_index("e" + pad_int(std::min(i, j), w) + "_" + pad_int(std::max(i, j), w));
            return FaceStep{e, i < j};
        };
        std::vector<std::vector<FaceStep>> faces = {
            {step(0, 2), step(2, 1), step(1, 0)},  // outer
            {step(0, 1), step(1, 3), step(3, 0)},
            {step(1, 2), step(2, 3), step(3, 1)},
            {step(2, 0), step(0, 3), step(3, 2)},
        };
        out.embedding = PlanarEmbedding(g, faces, 0);
    } else {
        // Declared orientable genus (documented external value, not computed).
        out.genus = ((n - 3) * (n - 4) + 11) / 12;
    }
    return out;
}

GeneratedGraph make_binary_tree(int height, bool dyadic) {
    require(height >= 1 && height <= 12, "binary tree: height must be in 1..12");
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<double> lengths;
    auto vid = [&](int level, int pos) { return "n" + pad_int(level, 2) + "_" + pad_int(pos, 4); };
    vertices.push_back(vid(0, 0));
    for (int level = 1; level <= height; ++level) {
        for (int pos = 0; pos < (1 << level); ++pos) {
            vertices.push_back(vid(level, pos));
            edges.push_back({"e" + pad_int(level, 2) + "_" + pad_int(pos, 4), vid(level - 1, pos / 2),
                             vid(level, pos)});
            lengths.push_back(dyadic ? std::ldexp(1.0, -level) : 1.0);
        }
    }
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);
    MetricGraph metric(g, lengths);
    PlanarEmbedding emb(g, {tree_face_walk(g)}, 0);
    return {std::move(metric), std::move(emb), 0,
            std::string("binary-tree-") + (dyadic ? "dyadic-" : "equilateral-") + std::to_string(height)};
}

GeneratedGraph make_random_planar(int n_points, std::uint64_t seed) {
    require(n_points >= 4, "random planar: need at least four points");
    Rng rng(seed);
    std::vector<Point2> pts;
    double sep = 0.9 / std::sqrt(static_cast<double>(n_points));
    int failures = 0;
    while (static_cast<int>(pts.size()) < n_points) {
        Point2 cand{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        bool ok = cand.x * cand.x + cand.y * cand.y < 0.9;
        for (const Point2& p : pts)
            ok = ok && (p.x - cand.x) * (p.x - cand.x) + (p.y - cand.y) * (p.y - cand.y) >= sep * sep;
        if (ok) {
            pts.push_back(cand);
            failures = 0;
        } else if (++failures > 2000) {
            sep *= 0.85;  // overly strict separation for this draw; relax
            failures = 0;
        }
    }

    std::vector<std::array<int, 3>> tris = delaunay_triangulate(pts);

    // Boundary of the triangulated region, walked counterclockwise: triangles
    // are CCW, so a directed edge whose reverse no triangle uses keeps the
    // region on its left.  Deriving the outer face from the triangles (rather
    // than an independently computed convex hull) keeps the face system
    // consistent even when floating-point incircle decisions shave a sliver
    // off the hull.
    std::set<std::pair<int, int>> directed;
    for (const auto& t : tris)
        for (int i = 0; i < 3; ++i) directed.insert({t[i], t[(i + 1) % 3]});
    std::map<int, int> next_on_boundary;
    for (const auto& [a, b] : directed)
        if (!directed.count({b, a})) {
            require(!next_on_boundary.count(a), "random planar: triangulated region is pinched");
            next_on_boundary[a] = b;
        }
    require(!next_on_boundary.empty(), "random planar: triangulated region has no boundary");
    std::vector<int> hull = {next_on_boundary.begin()->first};
    for (int v = next_on_boundary.at(hull[0]); v != hull[0]; v = next_on_boundary.at(v)) {
        hull.push_back(v);
        require(hull.size() <= next_on_boundary.size(), "random planar: boundary walk does not close");
    }
    require(hull.size() == next_on_boundary.size(), "random planar: boundary is not a single cycle");

    int w = digits(n_points - 1);
    std::vector<std::string> vertices;
    for (int i = 0; i < n_points; ++i) vertices.push_back("v" + pad_int(i, w));
    std::set<std::pair<int, int>> pair_set;
    for (const auto& t : tris)
        for (int i = 0; i < 3; ++i)
            pair_set.insert({std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])});
    std::vector<EdgeSpec> edges;
    for (const auto& [a, b] : pair_set)
        edges.push_back({"e" + pad_int(a, w) + "_" + pad_int(b, w), vertices[a], vertices[b]});
    CombinatorialGraph g = CombinatorialGraph::simple(vertices, edges);

    auto step = [&](int i, int j) {
        int e = g.edge_index("e" + pad_int(std::min(i, j), w) + "_" + pad_int(std::max(i, j), w));
        return FaceStep{e, i < j};
    };
    std::vector<std::vector<FaceStep>> faces;
    std::vector<FaceStep> outer;  // boundary is counterclockwise; outer face runs clockwise
    int m = static_cast<int>(hull.size());
    for (int i = 0; i < m; ++i) outer.push_back(step(hull[(m - i) % m], hull[m - 1 - i]));
    faces.push_back(outer);
    for (const auto& t : tris) faces.push_back({step(t[0], t[1]), step(t[1], t[2]), step(t[2], t[0])});

    MetricGraph metric(g, std::vector<double>(edges.size(), 1.0));
    PlanarEmbedding emb(g, faces, 0);
    log_debug("random planar: ", n_points, " points, ", edges.size(), " edges, ", tris.size(),
              " triangles");
    return {std::move(metric), std::move(emb), 0,
            "delaunay-" + std::to_string(n_points) + "-s" + std::to_string(seed)};
}

MetricGraph make_random_connected(int max_vertices, int max_edges, LengthProfile profile, Rng& rng) {
    require(max_vertices >= 2, "random connected: need at least two vertices");
    require(profile != LengthProfile::dyadic_decay, "random connected: dyadic profile is tree-specific");
    int nv = rng.uniform_int(2, max_vertices);
    int w = digits(nv - 1);
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i) vertices.push_back("v" + pad_int(i, w));

    std::set<std::pair<int, int>> used;
    std::vector<EdgeSpec> edges;
    auto add_edge = [&](int a, int b) {
        used.insert({a, b});
        edges.push_back({"e" + pad_int(static_cast<int>(edges.size()), 3), vertices[a], vertices[b]});
    };
    for (int i = 1; i < nv; ++i) add_edge(rng.uniform_int(0, i - 1), i);

    int max_extra = std::min(max_edges - (nv - 1), nv * (nv - 1) / 2 - (nv - 1));
    int extra = max_extra > 0 ? rng.uniform_int(0, max_extra) : 0;
    for (int added = 0, attempts = 0; added < extra && attempts < 20 * extra + 40; ++attempts) {
        int a = rng.uniform_int(0, nv - 2);
        int b = rng.uniform_int(a + 1, nv - 1);
        if (used.count({a, b})) continue;
        add_edge(a, b);
        ++added;
    }

    std::vector<double> lengths;
    for (std::size_t e = 0; e < edges.size(); ++e)
        lengths.push_back(profile == LengthProfile::equilateral ? 1.0 : rng.log_uniform(0.5, 2.0));
    return MetricGraph(CombinatorialGraph::simple(vertices, edges), lengths);
}

}  // namespace qgs
