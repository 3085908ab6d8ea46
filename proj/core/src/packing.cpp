#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <set>

#include "cap_fit.hpp"
#include "qgs/discrete.hpp"
#include "qgs/log.hpp"
#include "qgs/packing.hpp"

namespace qgs {

namespace {

constexpr double kPi = std::numbers::pi;

// Sphere triangulation containing the input graph: original vertices first,
// then augmentation vertices; triangles consistently oriented (every directed
// edge appears exactly once).
struct Triangulation {
    std::vector<std::string> labels;
    std::vector<char> aux;
    std::vector<std::array<int, 3>> tris;
    int n() const { return static_cast<int>(labels.size()); }
};

std::string fresh_aux_label(std::set<std::string>& taken, int& counter) {
    for (;; ++counter) {
        std::string cand = "aux" + std::to_string(counter);
        if (taken.insert(cand).second) {
            ++counter;
            return cand;
        }
    }
}

// Star-triangulates faces with distinct corners; faces whose walk repeats a
// vertex (trees, bridges) get a crown of per-corner vertices plus a hub so
// the result stays a simple triangulation.  Length-2 walks (a doubled edge
// side) take a single apex.
Triangulation augment(const CombinatorialGraph& g, const PlanarEmbedding& emb) {
    Triangulation t;
    t.labels = g.vertex_ids();
    t.aux.assign(t.labels.size(), 0);
    std::set<std::string> taken(t.labels.begin(), t.labels.end());
    int aux_counter = 0;

    auto add_aux = [&]() {
        int idx = t.n();
        t.labels.push_back(fresh_aux_label(taken, aux_counter));
        t.aux.push_back(1);
        return idx;
    };

    for (int f = 0; f < emb.num_faces(); ++f) {
        const auto& walk = emb.faces()[f];
        int m = static_cast<int>(walk.size());
        std::vector<int> c(m);
        for (int i = 0; i < m; ++i) c[i] = emb.walk_vertex(g, f, i);
        bool distinct = std::set<int>(c.begin(), c.end()).size() == c.size();

        if (m == 2) {
            int a = add_aux();
            t.tris.push_back({c[0], c[1], a});
            t.tris.push_back({c[1], c[0], a});
        } else if (m == 3 && distinct) {
            t.tris.push_back({c[0], c[1], c[2]});
        } else if (distinct) {
            int s = add_aux();
            for (int i = 0; i < m; ++i) t.tris.push_back({c[i], c[(i + 1) % m], s});
        } else {
            std::vector<int> ring(m);
            for (int i = 0; i < m; ++i) ring[i] = add_aux();
            int hub = add_aux();
            for (int i = 0; i < m; ++i) {
                int j = (i + 1) % m;
                t.tris.push_back({c[i], c[j], ring[i]});
                t.tris.push_back({ring[i], c[j], ring[j]});
                t.tris.push_back({hub, ring[i], ring[j]});
            }
        }
    }

    // sanity: closed oriented triangulated surface, every directed edge once
    std::set<std::pair<int, int>> directed;
    for (const auto& tr : t.tris) {
        for (int i = 0; i < 3; ++i) {
            auto de = std::make_pair(tr[i], tr[(i + 1) % 3]);
            require(de.first != de.second, "augmentation: degenerate triangle");
            require(directed.insert(de).second, "augmentation: directed edge used twice");
        }
    }
    for (const auto& de : directed)
        require(directed.count({de.second, de.first}) == 1, "augmentation: unmatched directed edge");
    return t;
}

double angle_at(double rv, double ru, double rw) {
    // half-angle form of the law of cosines for tangent circles, stable for
    // extreme radius ratios: sin^2(a/2) = ru rw / ((rv+ru)(rv+rw))
    double s = std::sqrt(ru * rw / ((rv + ru) * (rv + rw)));
    return 2.0 * std::asin(std::min(1.0, s));
}

// Euclidean boundary-value radius iteration (uniform neighbor model): solve
// for interior radii making every interior angle sum 2 pi, boundary radii
// pinned at 1.
std::vector<double> solve_radii(const Triangulation& t, const std::vector<std::array<int, 3>>& disk,
                                const std::vector<char>& interior, const PackOptions& opt) {
    int n = t.n();
    std::vector<std::vector<std::pair<int, int>>> fan(n);  // v -> (neighbor, neighbor) per incident triangle
    for (const auto& tr : disk)
        for (int i = 0; i < 3; ++i) fan[tr[i]].push_back({tr[(i + 1) % 3], tr[(i + 2) % 3]});

    std::vector<double> r(n, 1.0);
    std::vector<double> r_prev(n), delta_prev(n, 0.0);
    double lambda_prev = -1;

    auto angle_sum = [&](int v) {
        double th = 0;
        for (auto [u, w] : fan[v]) th += angle_at(r[v], r[u], r[w]);
        return th;
    };

    double err = 0;
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        r_prev = r;
        err = 0;
        for (int v = 0; v < n; ++v) {
            if (!interior[v]) continue;
            int k = static_cast<int>(fan[v].size());
            double th = angle_sum(v);
            err = std::max(err, std::abs(th - 2.0 * kPi));
            // uniform-neighbor surrogate: radius r_hat of identical petals
            // reproducing th, then the radius meeting the target exactly
            double beta = std::sin(th / (2.0 * k));
            double rhat = r[v] * beta / (1.0 - beta);
            double dlt = std::sin(kPi / k);
            r[v] = rhat * (1.0 - dlt) / dlt;
        }
        if (err < opt.angle_tol) return r;

        // geometric-series extrapolation once the contraction rate settles
        if (sweep % 2 == 1) {
            double num = 0, den = 0;
            for (int v = 0; v < n; ++v) {
                double d = r[v] - r_prev[v];
                num += d * d;
                den += delta_prev[v] * delta_prev[v];
                delta_prev[v] = d;
            }
            double lambda = den > 0 ? std::sqrt(num / den) : 0.0;
            if (lambda > 0.2 && lambda < 0.999 && lambda_prev > 0 && std::abs(lambda - lambda_prev) < 0.02) {
                double gain = lambda / (1.0 - lambda);
                std::vector<double> r_try(n);
                bool ok = true;
                for (int v = 0; v < n; ++v) {
                    r_try[v] = r[v] + gain * (r[v] - r_prev[v]);
                    if (interior[v] && r_try[v] <= 0) ok = false;
                }
                if (ok)
                    for (int v = 0; v < n; ++v)
                        if (interior[v]) r[v] = r_try[v];
            }
            lambda_prev = lambda;
        }
    }
    fail("packing: radius iteration did not converge (angle-sum residual " + std::to_string(err) + ")");
}

// Lays out the triangulated disk by breadth-first apex placement.  All
// triangles share one orientation, so each apex goes to the left of its
// already-placed base edge.
std::vector<Eigen::Vector2d> layout(const Triangulation& t, const std::vector<std::array<int, 3>>& disk,
                                    const std::vector<double>& r) {
    std::map<std::pair<int, int>, int> by_edge;  // directed edge -> triangle index
    for (size_t i = 0; i < disk.size(); ++i)
        for (int j = 0; j < 3; ++j) by_edge[{disk[i][j], disk[i][(j + 1) % 3]}] = static_cast<int>(i);

    std::vector<Eigen::Vector2d> pos(t.n(), Eigen::Vector2d::Zero());
    std::vector<char> placed(t.n(), 0), visited(disk.size(), 0);

    auto place_apex = [&](int a, int b, int apex) {
        Eigen::Vector2d pa = pos[a], pb = pos[b];
        double d = (pb - pa).norm();
        double ra = r[a] + r[apex], rb = r[b] + r[apex];
        double x = (d * d + ra * ra - rb * rb) / (2.0 * d);
        double y2 = ra * ra - x * x;
        double y = std::sqrt(std::max(0.0, y2));
        Eigen::Vector2d e = (pb - pa) / d;
        Eigen::Vector2d nrm(-e.y(), e.x());
        pos[apex] = pa + x * e + y * nrm;
        placed[apex] = 1;
    };

    const auto& t0 = disk[0];
    pos[t0[0]] = {0.0, 0.0};
    pos[t0[1]] = {r[t0[0]] + r[t0[1]], 0.0};
    placed[t0[0]] = placed[t0[1]] = 1;
    place_apex(t0[0], t0[1], t0[2]);

    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    while (!q.empty()) {
        int ti = q.front();
        q.pop();
        const auto& tr = disk[ti];
        int unplaced = -1;
        for (int j = 0; j < 3; ++j)
            if (!placed[tr[j]]) unplaced = j;
        if (unplaced >= 0) place_apex(tr[(unplaced + 1) % 3], tr[(unplaced + 2) % 3], tr[unplaced]);
        for (int j = 0; j < 3; ++j) {
            auto twin = by_edge.find({tr[(j + 1) % 3], tr[j]});
            if (twin != by_edge.end() && !visited[twin->second]) {
                visited[twin->second] = 1;
                q.push(twin->second);
            }
        }
    }
    for (int v = 0; v < t.n(); ++v)
        require(placed[v], "packing: layout did not reach every circle");
    return pos;
}

}  // namespace

// --- CirclePacking queries -----------------------------------------------------

int CirclePacking::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

double CirclePacking::max_tangency_residual() const {
    double worst = 0;
    for (const auto& [i, j] : tangent_pairs)
        worst = std::max(worst, std::abs(angular_distance(caps[i], caps[j]) - caps[i].theta() - caps[j].theta()));
    return worst;
}

double CirclePacking::min_univalence_margin() const {
    std::set<std::pair<int, int>> tangent;
    for (auto [i, j] : tangent_pairs) tangent.insert(std::minmax(i, j));
    double margin = std::numeric_limits<double>::infinity();
    int n = static_cast<int>(caps.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (tangent.count({i, j})) continue;
            margin = std::min(margin, angular_distance(caps[i], caps[j]) - caps[i].theta() - caps[j].theta());
        }
    return margin;
}

double CirclePacking::total_area() const {
    double s = 0;
    for (const auto& c : caps) s += c.area();
    return s;
}

// --- pack_planar -----------------------------------------------------------------

CirclePacking pack_planar(const CombinatorialGraph& g, const PlanarEmbedding& emb, const PackOptions& opt) {
    require(g.is_simple(), "packing: input graph must be simple");
    require(emb.genus() == 0, "packing: only genus-0 embeddings can be packed");

    Triangulation t = augment(g, emb);
    log_info("packing: augmented to ", t.n(), " circles, ", t.tris.size(), " triangles");

    // remove one face; its corners become the boundary of the disk problem
    std::vector<std::array<int, 3>> disk(t.tris.begin() + 1, t.tris.end());
    std::vector<char> interior(t.n(), 1);
    for (int v : t.tris[0]) interior[v] = 0;

    std::vector<double> r = solve_radii(t, disk, interior, opt);
    std::vector<Eigen::Vector2d> pos = layout(t, disk, r);

    // center and scale: moderate extent keeps the stereographic lift well
    // conditioned (this is a plane similarity, a Moebius move on the sphere)
    double wsum = 0;
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    for (int v = 0; v < t.n(); ++v) {
        double w = r[v] * r[v];
        centroid += w * pos[v];
        wsum += w;
    }
    centroid /= wsum;
    double extent = 0;
    for (int v = 0; v < t.n(); ++v) extent = std::max(extent, (pos[v] - centroid).norm() + r[v]);
    double scale = 2.2 / extent;

    CirclePacking pk;
    pk.labels = t.labels;
    pk.aux = t.aux;
    pk.plane.resize(t.n());
    pk.caps.resize(t.n());
    const Eigen::Vector3d beta = Eigen::Vector3d::UnitZ();
    for (int v = 0; v < t.n(); ++v) {
        Eigen::Vector2d c = (pos[v] - centroid) * scale;
        double rho = r[v] * scale;
        pk.plane[v] = {c, rho};
        auto lift = [&](double px, double py) {
            return stereographic_project(Eigen::Vector3d(px, py, 1.0), beta);
        };
        Eigen::Vector3d w1 = lift(c.x() + rho, c.y());
        Eigen::Vector3d w2 = lift(c.x() - 0.5 * rho, c.y() + 0.8660254037844386 * rho);
        Eigen::Vector3d w3 = lift(c.x() - 0.5 * rho, c.y() - 0.8660254037844386 * rho);
        pk.caps[v] = detail::cap_from_points(w1, w2, w3, lift(c.x(), c.y()));
    }

    std::set<std::pair<int, int>> und;
    for (const auto& tr : t.tris)
        for (int i = 0; i < 3; ++i) und.insert(std::minmax(tr[i], tr[(i + 1) % 3]));
    std::set<std::pair<int, int>> orig;
    for (const Edge& e : g.edges()) orig.insert(std::minmax(e.u, e.v));
    for (const auto& pr : und) {
        pk.tangent_pairs.push_back(pr);
        pk.pair_is_original.push_back(orig.count(pr) ? 1 : 0);
    }

    log_info("packing: tangency residual ", pk.max_tangency_residual(), ", univalence margin ",
             pk.min_univalence_margin());
    return pk;
}

// --- certificate -------------------------------------------------------------------

PackingBound packing_gap_bound(const CirclePacking& packing, const WeightedGraph& g) {
    const CombinatorialGraph& cg = g.graph();
    int n = cg.num_vertices();
    Eigen::MatrixXd f(n, 3);
    double sum_r2 = 0;
    for (int v = 0; v < n; ++v) {
        int ci = packing.index_of(cg.vertex_id(v));
        require(ci >= 0, "packing bound: packing is missing vertex '" + cg.vertex_id(v) + "'");
        require(!packing.aux[ci], "packing bound: vertex '" + cg.vertex_id(v) + "' maps to an augmentation cap");
        f.row(v) = packing.caps[ci].p.transpose();
        sum_r2 += packing.caps[ci].r * packing.caps[ci].r;
    }

    PackingBound out;
    double energy = 0;
    for (int e = 0; e < cg.num_edges(); ++e) {
        const Edge& ed = cg.edge(e);
        energy += g.conductance()[e] * (f.row(ed.u) - f.row(ed.v)).squaredNorm();
    }
    double norm_sq = 0;
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (int v = 0; v < n; ++v) {
        norm_sq += g.vertex_measure()[v];  // |p_v| = 1
        mean += g.vertex_measure()[v] * f.row(v).transpose();
    }
    out.quotient = energy / norm_sq;
    out.mean_residual = mean.norm();
    out.certified = 2.0 * g.max_weighted_degree() * sum_r2 / g.total_measure();
    out.classical = 8.0 * g.max_weighted_degree() / g.total_measure();
    out.lambda2 = eigenvalues(g).value_at(2);
    out.holds = out.lambda2 <= out.quotient + 1e-9 && out.quotient <= out.certified + 1e-6 &&
                out.certified <= out.classical + 1e-9 && out.mean_residual <= 1e-5;
    return out;
}

}  // namespace qgs
