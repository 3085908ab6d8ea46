#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qgs/error.hpp"
#include "qgs/log.hpp"
#include "qgs/packing.hpp"

namespace qgs {

namespace {

// Mass-weighted sum of deformed cap centers over the original vertices.
Eigen::Vector3d mass_sum(const std::vector<SphericalCap>& caps, const std::vector<double>& mass,
                         const Eigen::Vector3d& alpha) {
    Eigen::Vector3d s = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < caps.size(); ++i) s += mass[i] * mobius_deform(caps[i], alpha).p;
    return s;
}

Eigen::Vector3d clamp_ball(const Eigen::Vector3d& a, double rmax) {
    double n = a.norm();
    return n > rmax ? Eigen::Vector3d(a * (rmax / n)) : a;
}

struct NewtonResult {
    Eigen::Vector3d alpha = Eigen::Vector3d::Zero();
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

NewtonResult newton_from(const std::vector<SphericalCap>& caps, const std::vector<double>& mass,
                         Eigen::Vector3d alpha, double tol) {
    constexpr double kBallRadius = 0.995;
    constexpr double kJacStep = 1e-6;
    constexpr int kMaxIter = 200;

    NewtonResult res;
    alpha = clamp_ball(alpha, kBallRadius);
    Eigen::Vector3d f = mass_sum(caps, mass, alpha);
    for (int it = 0; it < kMaxIter; ++it) {
        res.iterations = it;
        if (f.norm() <= tol) {
            res.alpha = alpha;
            res.residual = f.norm();
            res.converged = true;
            return res;
        }
        Eigen::Matrix3d jac;
        for (int c = 0; c < 3; ++c) {
            Eigen::Vector3d hi = alpha, lo = alpha;
            hi[c] += kJacStep;
            lo[c] -= kJacStep;
            jac.col(c) = (mass_sum(caps, mass, clamp_ball(hi, kBallRadius + kJacStep)) -
                          mass_sum(caps, mass, clamp_ball(lo, kBallRadius + kJacStep))) /
                         (2 * kJacStep);
        }
        Eigen::Vector3d dir = jac.colPivHouseholderQr().solve(-f);
        if (!dir.allFinite() || dir.norm() > 1e6) dir = -f;  // singular Jacobian: steepest-style fallback

        double step = 1.0;
        bool moved = false;
        double fn = f.norm();
        while (step > 1e-12) {
            Eigen::Vector3d cand = clamp_ball(alpha + step * dir, kBallRadius);
            Eigen::Vector3d fc = mass_sum(caps, mass, cand);
            if (fc.norm() < (1.0 - 0.25 * step) * fn) {
                alpha = cand;
                f = fc;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;  // stalled; report best-so-far as non-converged
    }
    res.alpha = alpha;
    res.residual = f.norm();
    res.converged = f.norm() <= tol;
    return res;
}

}  // namespace

BalanceState balance(CirclePacking& packing, const CombinatorialGraph& graph, const std::vector<double>& m) {
    int n = graph.num_vertices();
    require(static_cast<int>(m.size()) == n, "balance: vertex-measure vector does not match the graph");
    double m_total = 0;
    for (double mv : m) {
        require(mv > 0, "balance: vertex measures must be positive");
        m_total += mv;
    }

    std::vector<SphericalCap> caps(n);
    std::vector<int> cap_index(n);
    for (int v = 0; v < n; ++v) {
        int ci = packing.index_of(graph.vertex_id(v));
        require(ci >= 0, "balance: packing is missing vertex '" + graph.vertex_id(v) + "'");
        require(!packing.aux[ci], "balance: vertex '" + graph.vertex_id(v) + "' maps to an augmentation cap");
        caps[v] = packing.caps[ci];
        cap_index[v] = ci;
    }

    // Mass-splitting margin over tangent original pairs; the balancing
    // certificate needs every tangent pair to carry less than half the mass.
    double eps = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < packing.tangent_pairs.size(); ++t) {
        if (!packing.pair_is_original[t]) continue;
        auto [a, b] = packing.tangent_pairs[t];
        double mu = 0, mv = 0;
        for (int v = 0; v < n; ++v) {
            if (cap_index[v] == a) mu = m[v];
            if (cap_index[v] == b) mv = m[v];
        }
        eps = std::min(eps, (m_total - 2 * (mu + mv)) / (2 * m_total));
    }
    require(eps > 0, "balance: a tangent pair carries at least half the total vertex measure");

    const double tol = 1e-10 * std::max(1.0, m_total);
    std::vector<Eigen::Vector3d> starts = {Eigen::Vector3d::Zero()};
    for (int c = 0; c < 3; ++c) {
        for (double s : {0.5, -0.5}) {
            Eigen::Vector3d a = Eigen::Vector3d::Zero();
            a[c] = s;
            starts.push_back(a);
        }
    }

    NewtonResult best;
    int total_iter = 0;
    for (const auto& a0 : starts) {
        NewtonResult r = newton_from(caps, m, a0, tol);
        total_iter += r.iterations;
        if (r.converged && (!best.converged || r.alpha.norm() < best.alpha.norm())) best = r;
        if (best.converged && best.alpha.norm() < 1e-12) break;  // exact center; no better answer exists
    }
    require(best.converged, "balance: center-of-mass iteration did not converge");
    log_debug("balance: |alpha| = ", best.alpha.norm(), ", residual = ", best.residual, " after ", total_iter,
              " iterations");

    // Shrink the smoothing shell until no original cap straddles it (a cap
    // touching the antipode of alpha keeps weight < 1 for every width).
    double delta = 0.2;
    std::vector<double> weights(n, 1.0);
    auto fill_weights = [&] {
        bool all_one = true;
        for (int v = 0; v < n; ++v) {
            weights[v] = smoothing_weight(best.alpha, caps[v], delta);
            all_one = all_one && weights[v] == 1.0;
        }
        return all_one;
    };
    bool all_one = fill_weights();
    while (!all_one && delta > 1e-4) {
        delta *= 0.5;
        all_one = fill_weights();
    }

    for (auto& cap : packing.caps) cap = mobius_deform(cap, best.alpha);
    packing.plane.clear();

    BalanceState out;
    out.alpha = best.alpha;
    out.delta = delta;
    out.epsilon = eps;
    out.weights = weights;
    out.all_weights_one = all_one;
    out.iterations = total_iter;
    Eigen::Vector3d post = Eigen::Vector3d::Zero();
    for (int v = 0; v < n; ++v) post += m[v] * packing.caps[cap_index[v]].p;
    out.residual = post.norm();
    return out;
}

}  // namespace qgs
