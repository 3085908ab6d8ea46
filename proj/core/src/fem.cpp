#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "qgs/log.hpp"
#include "qgs/metric.hpp"

namespace qgs {

namespace {

// Mesh bookkeeping: vertex dofs come first, then per-edge interior chains.
struct Mesh {
    std::vector<int> elems;   // elements per edge
    std::vector<double> h;    // element width per edge
    std::vector<int> offset;  // first interior dof index per edge
    int dofs = 0;
};

Mesh build_mesh(const MetricGraph& g, double target_h, int min_elems) {
    Mesh m;
    int nv = g.graph().num_vertices();
    m.offset.resize(g.graph().num_edges());
    m.elems.resize(g.graph().num_edges());
    m.h.resize(g.graph().num_edges());
    int next = nv;
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        int n = std::max(min_elems, static_cast<int>(std::ceil(g.length(e) / target_h - 1e-9)));
        m.elems[e] = n;
        m.h[e] = g.length(e) / n;
        m.offset[e] = next;
        next += n - 1;
    }
    m.dofs = next;
    return m;
}

// dof index of mesh node i (0..n) along edge e
int node_dof(const MetricGraph& g, const Mesh& m, int e, int i) {
    if (i == 0) return g.graph().edge(e).u;
    if (i == m.elems[e]) return g.graph().edge(e).v;
    return m.offset[e] + i - 1;
}

}  // namespace

Spectrum eigenvalues_fem(const MetricGraph& g, int count, double h) {
    require(count >= 1, "fem solver: count must be >= 1");
    require(h > 0, "fem solver: mesh width must be positive");
    require(h <= g.min_length() / 4.0 + 1e-12, "fem solver: mesh too coarse, need h <= l_min / 4");

    Mesh mesh = build_mesh(g, h, 4);
    require(mesh.dofs <= 6000, "fem solver: dense mesh too large (" + std::to_string(mesh.dofs) + " dofs)");
    require(count <= mesh.dofs, "fem solver: requested more eigenvalues than mesh dofs");

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(mesh.dofs, mesh.dofs);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(mesh.dofs, mesh.dofs);
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        double he = mesh.h[e];
        for (int i = 0; i < mesh.elems[e]; ++i) {
            int a = node_dof(g, mesh, e, i), b = node_dof(g, mesh, e, i + 1);
            K(a, a) += 1.0 / he;
            K(b, b) += 1.0 / he;
            K(a, b) -= 1.0 / he;
            K(b, a) -= 1.0 / he;
            M(a, a) += he / 3.0;
            M(b, b) += he / 3.0;
            M(a, b) += he / 6.0;
            M(b, a) += he / 6.0;
        }
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M);
    require(es.info() == Eigen::Success, "fem solver: generalized eigensolver did not converge (size " +
                                             std::to_string(mesh.dofs) + ")");
    std::vector<double> vals;
    double residual = 0;
    for (int i = 0; i < count; ++i) {
        double lam = es.eigenvalues()(i);
        if (lam < 0 && lam > -1e-9) lam = 0.0;
        vals.push_back(lam);
        Eigen::VectorXd x = es.eigenvectors().col(i);
        residual = std::max(residual, (K * x - lam * M * x).norm() / std::max(1.0, (M * x).norm()));
    }
    return Spectrum::from_sorted(vals, "fem", residual);
}

namespace {

struct CountAttempt {
    int count = 0;
    bool reliable = true;
};

// Inertia of K - sigma M by block elimination.  Interior chains of each edge
// are tridiagonal Toeplitz blocks tridiag(b, a, b); their LDL^T pivots follow
// d_1 = a, d_{i+1} = a - b^2 / d_i (the Sturm recursion), and the corner
// entries of the inverse needed for the 2x2 Schur coupling are
//   (A^-1)_{11} = (A^-1)_{mm} = 1/d_m,   (A^-1)_{1m} = prod_i (-b/d_i) / (-b).
CountAttempt count_inertia(const MetricGraph& g, const Mesh& mesh, double sigma) {
    int nv = g.graph().num_vertices();
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(nv, nv);
    CountAttempt out;

    double scale_floor = 0.0;
    for (int e = 0; e < g.graph().num_edges(); ++e)
        scale_floor = std::max(scale_floor, 2.0 / mesh.h[e] + sigma * mesh.h[e]);

    for (int e = 0; e < g.graph().num_edges(); ++e) {
        double he = mesh.h[e];
        double a = 2.0 / he - sigma * 2.0 * he / 3.0;
        double b = -(1.0 / he + sigma * he / 6.0);
        int m = mesh.elems[e] - 1;  // interior nodes
        require(m >= 1, "fem count: internal mesh error, edge without interior nodes");

        double d = a;
        double corner = 1.0;  // running prod (-b/d_i), becomes (A^-1)_{1m} * (-b)
        for (int i = 0; i < m; ++i) {
            if (i > 0) d = a - b * b / d;
            if (std::abs(d) < 1e-11 * scale_floor) {
                out.reliable = false;
                d = (d < 0 ? -1.0 : 1.0) * 1e-11 * scale_floor;
            }
            if (d < 0) ++out.count;
            corner *= -b / d;
        }
        double z_end = 1.0 / d;          // (A^-1)_{11} = (A^-1)_{mm}
        double z_cross = corner / (-b);  // (A^-1)_{1m}

        const Edge& ed = g.graph().edge(e);
        double va = 1.0 / he - sigma * he / 3.0;  // vertex diagonal contribution per chain end
        if (!ed.loop()) {
            S(ed.u, ed.u) += va - b * b * z_end;
            S(ed.v, ed.v) += va - b * b * z_end;
            S(ed.u, ed.v) += -b * b * z_cross;
            S(ed.v, ed.u) += -b * b * z_cross;
        } else {
            S(ed.u, ed.u) += 2 * va - b * b * (2 * z_end + 2 * z_cross);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    require(es.info() == Eigen::Success, "fem count: vertex-block eigensolver failed");
    double snorm = std::max(1e-30, std::abs(es.eigenvalues()(0)));
    snorm = std::max(snorm, std::abs(es.eigenvalues()(nv - 1)));
    for (int i = 0; i < nv; ++i) {
        double lam = es.eigenvalues()(i);
        if (std::abs(lam) < 1e-10 * snorm) out.reliable = false;
        if (lam < 0) ++out.count;
    }
    return out;
}

}  // namespace

int fem_count_below(const MetricGraph& g, double h, double lambda) {
    require(h > 0, "fem count: mesh width must be positive");
    require(lambda > 0, "fem count: threshold must be positive");
    Mesh mesh = build_mesh(g, h, 4);

    // A pivot or Schur eigenvalue hitting zero means sigma sits on an interior
    // resonance of the elimination; nudge deterministically and retry.
    for (int attempt = 0; attempt < 8; ++attempt) {
        double wiggle = (attempt == 0) ? 0.0 : ((attempt % 2 == 1) ? 1.0 : -1.0) * ((attempt + 1) / 2);
        double sigma = lambda * (1.0 + 3e-7 * wiggle);
        CountAttempt r = count_inertia(g, mesh, sigma);
        if (r.reliable) return r.count;
        log_debug("fem count: pivot near zero at sigma = ", sigma, ", retrying");
    }
    fail("fem count: persistent near-singular pivots around lambda = " + std::to_string(lambda));
}

}  // namespace qgs
