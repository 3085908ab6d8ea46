#pragma once

#include <Eigen/Dense>

#include "qgs/graph.hpp"
#include "qgs/spectrum.hpp"

namespace qgs {

// Stiffness matrix K of the form q(f) = sum_e mu(e) (f(u) - f(v))^2, so
// (K f)(u) = sum_{e = {u,v}} mu(e) (f(u) - f(v)).
Eigen::MatrixXd stiffness_matrix(const WeightedGraph& g);

// Operator matrix of (L f)(u) = (1/m(u)) sum_e mu(e)(f(u) - f(v)), returned in
// the symmetrized form A = M^{-1/2} K M^{-1/2}, which shares its spectrum.
Eigen::MatrixXd assemble_laplacian(const WeightedGraph& g);

// Full spectrum of the weighted Laplacian by a dense symmetric solve.  The
// reported residual is max_i ||A x_i - lambda_i x_i||_2.
Spectrum eigenvalues(const WeightedGraph& g);

// Normalized Laplacian data for conductances omega: vertex measure
// m(v) = sum of omega over incident edges.  Eigenvalues lie in [0, 2].
WeightedGraph normalized_laplacian(const CombinatorialGraph& g, const std::vector<double>& omega);

struct QuadraticFormValue {
    double energy = 0.0;    // q(f)
    double norm_sq = 0.0;   // sum_v m(v) |f(v)|^2
    Eigen::VectorXd mean;   // sum_v m(v) f(v), one entry per component
    double quotient() const { return energy / norm_sq; }
    double mean_norm() const { return mean.norm(); }
};

// Rayleigh data of a vector-valued test function; f has one row per vertex
// and d >= 1 columns.  If the weighted mean is (numerically) zero, the
// quotient is an upper bound for lambda_2.
QuadraticFormValue rayleigh_quotient(const WeightedGraph& g, const Eigen::MatrixXd& f);

// Eigenvalue map of the edge-midpoint subdivision: a subdivision eigenvalue
// lambda' <= 1 corresponds to the parent eigenvalue 4 lambda' - 2 lambda'^2.
double subdivision_spectrum_map(double lambda_sub);

// Equilateral correspondence between normalized eigenvalues and the metric
// spectrum: lambda in [0, 2] maps to (arccos(1 - lambda) / ell)^2 for common
// edge length ell.
double von_below_transform(double lambda_normalized, double ell = 1.0);

}  // namespace qgs
