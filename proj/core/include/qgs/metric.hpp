#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qgs/graph.hpp"
#include "qgs/spectrum.hpp"

namespace qgs {

// Characteristic system of the Kirchhoff Laplacian.  Each edge carries the
// ansatz a_e cos(kx) + b_e sin(kx); the rows collect vertex continuity
// (degree - 1 rows per vertex) and flux conservation (one row per vertex),
// giving a square system of size 2|E|.  lambda = k^2 > 0 is an eigenvalue
// exactly when the row-normalized matrix T(k) is singular, with multiplicity
// equal to the kernel dimension.
class SecularSystem {
public:
    explicit SecularSystem(const MetricGraph& g);

    int size() const { return 2 * g_->graph().num_edges(); }
    Eigen::MatrixXd matrix(double k) const;        // row-normalized T(k)
    double sigma_min(double k) const;
    Eigen::VectorXd singular_values(double k) const;  // descending

private:
    const MetricGraph* g_;
};

struct SecularOptions {
    double accept_tol = 1e-8;    // sigma_min threshold certifying a root
    double mult_tol = 1e-7;      // singular values below this count toward multiplicity
    double refine_dk = 1e-11;    // root localization width in k
    double step_override = 0.0;  // scan step; 0 picks min(pi/(8 l_max), pi/(2 L))
    int max_step_halvings = 3;   // re-scan attempts when the count check fails
    bool count_check = true;     // cross-check root count against the FEM inertia count
};

// First `count` eigenvalues (including lambda_1 = 0, which is inserted
// analytically; the scan runs over k > 0 only).  Loops and parallel edges are
// removed by an exact spectrum-preserving subdivision before assembly.  The
// found roots are validated against an independent finite-element eigenvalue
// count below a certified ceiling; persistent disagreement is an error.
Spectrum eigenvalues_secular(const MetricGraph& g, int count, const SecularOptions& opt = {});

// All eigenvalues <= lambda_ceiling, same machinery.
Spectrum eigenvalues_secular_below(const MetricGraph& g, double lambda_ceiling, const SecularOptions& opt = {});

// First `count` eigenvalues of the conforming P1 discretization on per-edge
// uniform meshes of width <= h (h <= l_min/4 required).  Dense generalized
// symmetric solve; values converge to the true spectrum from above at O(h^2).
Spectrum eigenvalues_fem(const MetricGraph& g, int count, double h);

// Number of Laplacian eigenvalues (with multiplicity) of the P1 system that
// are < lambda, by Sylvester inertia of K - lambda M: per-edge interior
// chains are eliminated by a scalar LDL^T recursion and the Schur complement
// on the vertex block is diagonalized.  Runs in O(total mesh size).
int fem_count_below(const MetricGraph& g, double h, double lambda);

// Piecewise-cosine interpolation of vertex data f : V -> C^d into H^1:
// on edge e = (i, t),  phi(x) = (f_i + f_t)/2 + (f_i - f_t)/2 * cos(pi x / l_e),
// which matches f at the endpoints and has Neumann derivative there.
class TestFunctionEmbedding {
public:
    TestFunctionEmbedding(const MetricGraph& g, Eigen::MatrixXcd vertex_values);

    int dimension() const { return static_cast<int>(f_.cols()); }
    // ||phi||^2_{L^2} = sum_e l_e/8 (3|f_i|^2 + 2 Re<f_i, f_t> + 3|f_t|^2)
    double norm_sq() const;
    // int |phi'|^2 = (pi^2/8) sum_e |f_i - f_t|^2 / l_e
    double energy() const;
    // sum_v d_v |f_v|^2 with d_v the metric degree (discrete comparison norm)
    double discrete_norm_sq() const;
    Eigen::VectorXcd value(int edge, double x) const;
    Eigen::VectorXcd derivative(int edge, double x) const;

private:
    const MetricGraph* g_;
    Eigen::MatrixXcd f_;
};

TestFunctionEmbedding embed_test_function(const MetricGraph& g, const Eigen::MatrixXcd& vertex_values);

// Transfer graph of the comparison theorem: m(v) = metric degree, mu(e) = 1/l_e
// on the simple representative of g.
WeightedGraph comparison_weights(const MetricGraph& g);

struct SpectrumComparison {
    std::vector<double> metric;     // lambda_k of the Kirchhoff Laplacian
    std::vector<double> discrete;   // lambda_k of the weighted graph Laplacian
    std::vector<double> ratio;      // metric / ((pi^2/2) * discrete), k >= 2
    bool holds = false;             // metric_k <= (pi^2/2) discrete_k + 1e-9 for all k
};

// Verifies lambda_k(Delta) <= (pi^2/2) lambda_k(L_{m,mu}) for k = 1..k_max.
// k_max may not exceed the vertex count of the simple representative.
SpectrumComparison compare_spectra(const MetricGraph& g, int k_max);

}  // namespace qgs
