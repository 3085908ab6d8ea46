#include "qgs/discrete.hpp"

#include <algorithm>
#include <cmath>

namespace qgs {

Eigen::MatrixXd stiffness_matrix(const WeightedGraph& g) {
    int n = g.graph().num_vertices();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    const auto& mu = g.conductance();
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        const Edge& ed = g.graph().edge(e);
        K(ed.u, ed.u) += mu[e];
        K(ed.v, ed.v) += mu[e];
        K(ed.u, ed.v) -= mu[e];
        K(ed.v, ed.u) -= mu[e];
    }
    return K;
}

Eigen::MatrixXd assemble_laplacian(const WeightedGraph& g) {
    Eigen::MatrixXd K = stiffness_matrix(g);
    int n = g.graph().num_vertices();
    Eigen::VectorXd dinv(n);
    for (int v = 0; v < n; ++v) dinv(v) = 1.0 / std::sqrt(g.vertex_measure()[v]);
    return dinv.asDiagonal() * K * dinv.asDiagonal();
}

Spectrum eigenvalues(const WeightedGraph& g) {
    Eigen::MatrixXd A = assemble_laplacian(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    require(es.info() == Eigen::Success,
            "dense eigensolver: no convergence within the implicit QR iteration limit (matrix size " +
                std::to_string(A.rows()) + ")");
    Eigen::VectorXd ev = es.eigenvalues();
    double residual = 0.0;
    for (int i = 0; i < ev.size(); ++i)
        residual = std::max(residual, (A * es.eigenvectors().col(i) - ev(i) * es.eigenvectors().col(i)).norm());
    std::vector<double> vals(ev.data(), ev.data() + ev.size());
    // clamp the tiny negative round-off on the zero eigenvalue
    for (double& v : vals)
        if (v < 0 && v > -1e-12) v = 0.0;
    return Spectrum::from_sorted(vals, "dense", residual);
}

WeightedGraph normalized_laplacian(const CombinatorialGraph& g, const std::vector<double>& omega) {
    require(static_cast<int>(omega.size()) == g.num_edges(), "normalized laplacian: one weight per edge required");
    std::vector<double> m(g.num_vertices(), 0.0);
    for (int e = 0; e < g.num_edges(); ++e) {
        m[g.edge(e).u] += omega[e];
        m[g.edge(e).v] += omega[e];
    }
    return WeightedGraph(g, std::move(m), omega);
}

QuadraticFormValue rayleigh_quotient(const WeightedGraph& g, const Eigen::MatrixXd& f) {
    require(f.rows() == g.graph().num_vertices(), "rayleigh quotient: one row per vertex required");
    QuadraticFormValue out;
    const auto& mu = g.conductance();
    const auto& m = g.vertex_measure();
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        const Edge& ed = g.graph().edge(e);
        out.energy += mu[e] * (f.row(ed.u) - f.row(ed.v)).squaredNorm();
    }
    out.mean = Eigen::VectorXd::Zero(f.cols());
    for (int v = 0; v < f.rows(); ++v) {
        out.norm_sq += m[v] * f.row(v).squaredNorm();
        out.mean += m[v] * f.row(v).transpose();
    }
    require(out.norm_sq > 0, "rayleigh quotient: zero test function");
    return out;
}

double subdivision_spectrum_map(double lambda_sub) {
    require(lambda_sub >= -1e-12 && lambda_sub <= 2.0 + 1e-12,
            "subdivision map: eigenvalue outside [0, 2]");
    return 4.0 * lambda_sub - 2.0 * lambda_sub * lambda_sub;
}

double von_below_transform(double lambda_normalized, double ell) {
    require(ell > 0, "von below transform: edge length must be positive");
    require(lambda_normalized >= -1e-12 && lambda_normalized <= 2.0 + 1e-12,
            "von below transform: normalized eigenvalue outside [0, 2]");
    double x = std::clamp(1.0 - lambda_normalized, -1.0, 1.0);
    double k = std::acos(x) / ell;
    return k * k;
}

}  // namespace qgs
