#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qgs/graph.hpp"

namespace qgs {

// Cap on the unit sphere: unit center p and chord radius r in (0, 2).  The
// angular radius is theta = 2 asin(r/2) and the area pi r^2.
struct SphericalCap {
    Eigen::Vector3d p = Eigen::Vector3d::UnitZ();
    double r = 0;
    double theta() const { return 2.0 * std::asin(0.5 * r); }
    double area() const;
};

// Angle between cap centers; two caps are tangent when this equals the sum of
// their angular radii.
double angular_distance(const SphericalCap& a, const SphericalCap& b);

struct PlaneCircle {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    double rho = 0;
};

// A univalent tangency packing: one cap per vertex of the triangulated
// augmentation of the input graph.  Caps of augmentation vertices are kept
// (they are part of the geometric certificate) but flagged.
struct CirclePacking {
    std::vector<std::string> labels;              // vertex ids (input + generated aux ids)
    std::vector<char> aux;                        // 1 for augmentation vertices
    std::vector<SphericalCap> caps;
    std::vector<PlaneCircle> plane;               // pre-lift layout; empty after a deformation
    std::vector<std::pair<int, int>> tangent_pairs;  // triangulation edges as cap index pairs
    std::vector<char> pair_is_original;           // tangency realizes an input edge

    int index_of(const std::string& label) const;

    double max_tangency_residual() const;  // max |ang dist - (theta_u + theta_v)| over tangent pairs
    double min_univalence_margin() const;  // min of ang dist - sum of radii over non-tangent pairs
    double total_area() const;             // sum of cap areas, at most 4 pi for a univalent packing
};

struct PackOptions {
    double angle_tol = 1e-13;  // radius iteration stop: max |angle sum - 2 pi|
    int max_sweeps = 500000;
};

// Computes a tangency circle packing for a genus-0 embedded simple graph:
// the embedding is star/crown-augmented to a simple sphere triangulation,
// packed in the plane by the uniform-neighbor radius iteration, laid out,
// and lifted stereographically.
CirclePacking pack_planar(const CombinatorialGraph& g, const PlanarEmbedding& emb, const PackOptions& opt = {});

// Inverse stereographic projection from the tangent plane at pole beta
// (points beta + t, <t, beta> = 0) onto the unit sphere; the plane point at
// infinity maps to -beta.
Eigen::Vector3d stereographic_project(const Eigen::Vector3d& y, const Eigen::Vector3d& beta);
// Plane preimage; z must not equal -beta.
Eigen::Vector3d stereographic_unproject(const Eigen::Vector3d& z, const Eigen::Vector3d& beta);

// Sphere Moebius transform f_alpha for |alpha| < 1: conjugate of the dilation
// by 1 - |alpha| in the tangent plane at alpha/|alpha|; f_0 = identity.  As
// |alpha| -> 1, caps not containing -alpha collapse toward alpha.
Eigen::Vector3d mobius_point(const Eigen::Vector3d& z, const Eigen::Vector3d& alpha);
SphericalCap mobius_deform(const SphericalCap& cap, const Eigen::Vector3d& alpha);

struct BalanceState {
    Eigen::Vector3d alpha = Eigen::Vector3d::Zero();
    double residual = 0;         // |sum m(v) p_v| after deformation
    double delta = 0;            // final smoothing shell width
    double epsilon = 0;          // mass-splitting margin min (m(V) - 2 m(U)) / (2 m(V))
    std::vector<double> weights; // smoothing weights at alpha, per original cap
    bool all_weights_one = false;
    int iterations = 0;
};

// Moebius-balances the packing: finds alpha with sum over original vertices
// of m(v) * center(f_alpha(C_v)) = 0 and deforms all caps by f_alpha.
// `m` is indexed like `graph.vertex_ids()`; requires 2 (m(u) + m(v)) < m(V)
// for every tangent original pair.
BalanceState balance(CirclePacking& packing, const CombinatorialGraph& graph, const std::vector<double>& m);

// Smoothing weight w_v(alpha) of the deformation argument: 1 inside the
// shell, tapering once max_{z in C_v} |alpha - z| >= 2 - delta.
double smoothing_weight(const Eigen::Vector3d& alpha, const SphericalCap& cap, double delta);

struct PackingBound {
    double lambda2 = 0;          // dense eigenvalue of the weighted Laplacian
    double quotient = 0;         // Rayleigh quotient of the cap-center test map
    double certified = 0;        // 2 Deg_mu_max sum r_v^2 / m(V)
    double classical = 0;        // 8 Deg_mu_max / m(V)
    double mean_residual = 0;    // |sum m(v) p_v|
    bool holds = false;          // lambda2 <= quotient <= certified <= classical (+1e-9)
};

// Evaluates the spectral-gap certificate carried by a balanced packing for
// the weighted graph (m, mu) living on the packing's original vertices.
PackingBound packing_gap_bound(const CirclePacking& packing, const WeightedGraph& g);

}  // namespace qgs
