#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgs/discrete.hpp"
#include "qgs/log.hpp"
#include "qgs/metric.hpp"

namespace qgs {

namespace {
constexpr double kPi = std::numbers::pi;
}

// --- SecularSystem -----------------------------------------------------------

SecularSystem::SecularSystem(const MetricGraph& g) : g_(&g) {}

Eigen::MatrixXd SecularSystem::matrix(double k) const {
    const CombinatorialGraph& cg = g_->graph();
    const int n = size();
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    int row = 0;

    // endpoint value coefficients: at the source, phi = a_e; at the target,
    // phi = a_e cos(k l) + b_e sin(k l)
    auto add_value = [&](int r, const Incidence& inc, double sign) {
        int e = inc.edge;
        if (inc.end == 0) {
            T(r, 2 * e) += sign;
        } else {
            double kl = k * g_->length(e);
            T(r, 2 * e) += sign * std::cos(kl);
            T(r, 2 * e + 1) += sign * std::sin(kl);
        }
    };
    // outward derivative / k: at the source, b_e; at the target,
    // a_e sin(k l) - b_e cos(k l)
    auto add_flux = [&](int r, const Incidence& inc) {
        int e = inc.edge;
        if (inc.end == 0) {
            T(r, 2 * e + 1) += 1.0;
        } else {
            double kl = k * g_->length(e);
            T(r, 2 * e) += std::sin(kl);
            T(r, 2 * e + 1) -= std::cos(kl);
        }
    };

    for (int v = 0; v < cg.num_vertices(); ++v) {
        const auto& inc = cg.incidences(v);
        for (size_t i = 1; i < inc.size(); ++i) {
            add_value(row, inc[i], 1.0);
            add_value(row, inc[0], -1.0);
            ++row;
        }
        for (const auto& in : inc) add_flux(row, in);
        ++row;
    }
    // row count: sum_v (deg - 1) + |V| = 2|E|
    if (row != n) fail("secular system: internal row count mismatch");

    for (int r = 0; r < n; ++r) {
        double nrm = T.row(r).norm();
        if (nrm > 0) T.row(r) /= nrm;
    }
    return T;
}

Eigen::VectorXd SecularSystem::singular_values(double k) const {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix(k));
    return svd.singularValues();
}

double SecularSystem::sigma_min(double k) const {
    Eigen::VectorXd sv = singular_values(k);
    return sv(sv.size() - 1);
}

// --- root scan ----------------------------------------------------------------

namespace {

struct Root {
    double k = 0;
    int multiplicity = 1;
    double sigma = 0;
};

// Localizes the minimum of the V-shaped sigma_min profile inside [lo, hi]
// down to width <= 2 * tol, using a two-line fit with bisection fallback.
double refine_min(const SecularSystem& sys, double lo, double mid, double hi, double f_mid, double tol) {
    double f_lo = sys.sigma_min(lo), f_hi = sys.sigma_min(hi);
    while (hi - lo > 2 * tol) {
        // intersect the line through (lo, f_lo)-(mid, f_mid) descending side
        // with (mid, f_mid)-(hi, f_hi) ascending side
        double cand = std::numeric_limits<double>::quiet_NaN();
        double sl = (f_mid - f_lo) / (mid - lo);
        double sr = (f_hi - f_mid) / (hi - mid);
        if (sl < 0 && sr > 0) cand = (f_lo - f_hi + sr * hi - sl * lo) / (sr - sl);
        bool take_fit = std::isfinite(cand) && cand > lo + 0.05 * (hi - lo) && cand < hi - 0.05 * (hi - lo) &&
                        std::abs(cand - mid) > 1e-3 * (hi - lo);
        double x = take_fit ? cand : (mid - lo > hi - mid ? 0.5 * (lo + mid) : 0.5 * (mid + hi));
        double fx = sys.sigma_min(x);
        // keep the best point as the new mid and shrink the bracket around it
        if (fx <= f_mid) {
            if (x < mid) {
                hi = mid;
                f_hi = f_mid;
            } else {
                lo = mid;
                f_lo = f_mid;
            }
            mid = x;
            f_mid = fx;
        } else {
            if (x < mid) {
                lo = x;
                f_lo = fx;
            } else {
                hi = x;
                f_hi = fx;
            }
        }
    }
    return mid;
}

struct ScanResult {
    std::vector<Root> roots;   // ascending k, all <= ceiling
    double ceiling_k = 0;      // sigma-safe point bounding the scan
    bool ceiling_safe = false;
};

// Scans (0, k_target], extending slightly past it to certify a root-free
// ceiling.  The scan starts at 0.5 pi / L: the spectral gap bound
// lambda_2 >= pi^2 / L^2 keeps every positive root above pi / L, while the
// shadow of the k = 0 eigenvalue keeps sigma_min small only near 0.
ScanResult scan_roots(const SecularSystem& sys, const MetricGraph& g, double k_target, double step,
                      const SecularOptions& opt) {
    ScanResult out;
    double k_lo = std::min(0.5 * kPi / g.total_length(), 0.45 * k_target);
    double k_hi = k_target + 6 * step;

    std::vector<double> ks, fs;
    for (double k = k_lo; k <= k_hi + 0.5 * step; k += step) {
        ks.push_back(k);
        fs.push_back(sys.sigma_min(k));
    }

    auto harvest = [&](double lo, double mid, double hi, double f_mid) {
        double k_star = refine_min(sys, lo, mid, hi, f_mid, opt.refine_dk);
        Eigen::VectorXd sv = sys.singular_values(k_star);
        double smin = sv(sv.size() - 1);
        if (smin > opt.accept_tol) return;  // benign local minimum, not a root
        int mult = 0;
        for (int j = 0; j < sv.size(); ++j)
            if (sv(j) < opt.mult_tol) ++mult;
        int suspicious = 0;
        for (int j = 0; j < sv.size(); ++j)
            if (sv(j) >= opt.mult_tol && sv(j) < 1e-5) ++suspicious;
        if (suspicious > 0)
            fail("secular solver: multiplicity ambiguous at k = " + std::to_string(k_star) +
                 " (singular values cluster in the undecidable band)");
        if (!out.roots.empty() && std::abs(out.roots.back().k - k_star) < 10 * opt.refine_dk)
            return;  // same root found twice from adjacent dips
        out.roots.push_back({k_star, mult, smin});
    };

    for (size_t i = 1; i + 1 < ks.size(); ++i) {
        if (!(fs[i] < fs[i - 1] && fs[i] <= fs[i + 1])) continue;
        // Sub-scan the dip bracket before refining: two roots a fraction of a
        // step apart produce a single coarse dip (the sigma ridge between them
        // stays below a neighboring sample), and refining that dip directly
        // would keep only one of them.
        constexpr int kSub = 64;
        double sstep = (ks[i + 1] - ks[i - 1]) / kSub;
        std::vector<double> sk(kSub + 1), sf(kSub + 1);
        for (int j = 0; j <= kSub; ++j) {
            sk[j] = ks[i - 1] + j * sstep;
            sf[j] = j == 0 ? fs[i - 1] : (j == kSub ? fs[i + 1] : sys.sigma_min(sk[j]));
        }
        for (int j = 1; j < kSub; ++j)
            if (sf[j] < sf[j - 1] && sf[j] <= sf[j + 1]) harvest(sk[j - 1], sk[j], sk[j + 1], sf[j]);
    }

    // certify a ceiling: a grid point past k_target with comfortably large sigma
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < k_target) continue;
        bool near_root = false;
        for (const Root& r : out.roots)
            if (std::abs(r.k - ks[i]) < 1.5 * step) near_root = true;
        if (!near_root && fs[i] > 1e-4) {
            out.ceiling_k = ks[i];
            out.ceiling_safe = true;
            break;
        }
    }
    if (!out.ceiling_safe) {
        out.ceiling_k = k_hi;
        out.ceiling_safe = sys.sigma_min(k_hi) > 1e-4;
    }
    while (!out.roots.empty() && out.roots.back().k > out.ceiling_k) out.roots.pop_back();
    return out;
}

// Mesh width for the inertia cross-check: the P1 eigenvalue error at
// wavenumber k is ~ k^3 h^2 / 24 in k units; keep it a small fraction of the
// distance from the ceiling to the nearest root.
double counting_mesh(const MetricGraph& g, double ceiling_k, double gap_k) {
    double h = g.min_length() / 4.0;
    if (ceiling_k > 0 && gap_k > 0) {
        double h_req = std::sqrt(3.0 * gap_k / std::max(1.0, ceiling_k * ceiling_k * ceiling_k));
        h = std::min(h, h_req);
    }
    return std::max(h, g.total_length() / 400000.0);  // cap the counting mesh size
}

Spectrum roots_to_spectrum(const std::vector<Root>& roots, int limit) {
    std::vector<double> vals;
    double resid = 0;
    vals.push_back(0.0);
    for (const Root& r : roots) {
        for (int j = 0; j < r.multiplicity; ++j) vals.push_back(r.k * r.k);
        resid = std::max(resid, r.sigma);
    }
    if (limit > 0 && static_cast<int>(vals.size()) > limit) vals.resize(limit);
    return Spectrum::from_sorted(vals, "secular", resid);
}

Spectrum solve_secular(const MetricGraph& input, int count, double lambda_ceiling, const SecularOptions& opt) {
    MetricGraph g = make_simple(input);
    SecularSystem sys(g);

    const double L = g.total_length();
    const int weyl_slack = g.graph().num_vertices() + g.graph().betti() + 2;
    double base_step = opt.step_override > 0
                           ? opt.step_override
                           : std::min(kPi / (8.0 * g.max_length()), kPi / (2.0 * L));

    // Count mode starts from a window sized by the requested count alone (the
    // loop widens it geometrically when the spectrum starts higher), so deep
    // graphs with small gaps are not scanned across their whole vertex count.
    bool ceiling_mode = lambda_ceiling > 0;
    double k_target = ceiling_mode ? std::sqrt(lambda_ceiling) : kPi * (count + 2) / L;
    if (!ceiling_mode) k_target = std::max(k_target, 1.5 * kPi / L);

    for (int window = 0; window < 40; ++window) {
        double step = base_step;
        for (int halving = 0; halving <= opt.max_step_halvings; ++halving, step *= 0.5) {
            ScanResult sr = scan_roots(sys, g, k_target, step, opt);
            int found = 1;  // lambda_1 = 0
            for (const Root& r : sr.roots) found += r.multiplicity;

            if (!ceiling_mode && found < count) break;  // need a wider window, not a finer step

            // Weyl plausibility: N(k) ~ L k / pi up to a vertex-order term
            double expected = L * sr.ceiling_k / kPi;
            if (std::abs(found - expected) > weyl_slack + 1) {
                log_debug("secular: Weyl count check suggests re-scan (found ", found, ", expected ~", expected, ")");
                continue;
            }

            if (opt.count_check) {
                if (!sr.ceiling_safe) {
                    // On resonant grids (equilateral graphs whose eigenvalue
                    // spacing divides the step) every sample past k_target can
                    // sit on or next to a root; a finer step separates them.
                    log_debug("secular: no sigma-safe ceiling at step ", step, "; refining");
                    if (halving == opt.max_step_halvings)
                        fail("secular solver: window exhausted, no sigma-safe ceiling above k = " +
                             std::to_string(k_target));
                    continue;
                }
                double gap_k = sr.ceiling_k;
                for (const Root& r : sr.roots) gap_k = std::min(gap_k, std::abs(sr.ceiling_k - r.k));
                double h = counting_mesh(g, sr.ceiling_k, gap_k);
                int fem = fem_count_below(g, h, sr.ceiling_k * sr.ceiling_k);
                if (fem != found) {
                    log_debug("secular: count mismatch vs FEM inertia (secular ", found, ", fem ", fem,
                              ") at step ", step);
                    if (halving == opt.max_step_halvings)
                        fail("secular solver: multiplicity ambiguous (secular count " + std::to_string(found) +
                             " vs FEM count " + std::to_string(fem) + " below lambda = " +
                             std::to_string(sr.ceiling_k * sr.ceiling_k) + ")");
                    continue;
                }
            }

            if (ceiling_mode) {
                Spectrum s = roots_to_spectrum(sr.roots, 0);
                // keep only values <= requested ceiling (scan certified past it)
                std::vector<double> vals;
                for (double v : s.expanded())
                    if (v <= lambda_ceiling) vals.push_back(v);
                return Spectrum::from_sorted(vals, "secular", s.residual);
            }
            return roots_to_spectrum(sr.roots, count);
        }
        if (ceiling_mode)
            fail("secular solver: count cross-check kept failing below lambda = " + std::to_string(lambda_ceiling));
        k_target *= 1.35;
    }
    fail("secular solver: window exhausted before finding " + std::to_string(count) + " eigenvalues");
}

}  // namespace

Spectrum eigenvalues_secular(const MetricGraph& g, int count, const SecularOptions& opt) {
    require(count >= 1, "secular solver: count must be >= 1");
    if (count == 1) return Spectrum::from_sorted({0.0}, "secular", 0.0);
    return solve_secular(g, count, 0.0, opt);
}

Spectrum eigenvalues_secular_below(const MetricGraph& g, double lambda_ceiling, const SecularOptions& opt) {
    require(lambda_ceiling > 0, "secular solver: ceiling must be positive");
    return solve_secular(g, 0, lambda_ceiling, opt);
}

// --- comparison ----------------------------------------------------------------

WeightedGraph comparison_weights(const MetricGraph& g) {
    MetricGraph s = make_simple(g);
    int n = s.graph().num_vertices();
    std::vector<double> m(n);
    for (int v = 0; v < n; ++v) m[v] = s.metric_degree(v);
    std::vector<double> mu(s.graph().num_edges());
    for (int e = 0; e < s.graph().num_edges(); ++e) mu[e] = 1.0 / s.length(e);
    return WeightedGraph(s.graph(), std::move(m), std::move(mu));
}

SpectrumComparison compare_spectra(const MetricGraph& g, int k_max) {
    MetricGraph s = make_simple(g);
    require(k_max >= 1 && k_max <= s.graph().num_vertices(),
            "compare spectra: k_max must be between 1 and the simple representative's vertex count");
    WeightedGraph w = comparison_weights(s);

    Spectrum metric = eigenvalues_secular(s, k_max);
    Spectrum discrete = eigenvalues(w);

    SpectrumComparison out;
    auto mv = metric.expanded();
    auto dv = discrete.expanded();
    out.holds = true;
    for (int k = 1; k <= k_max; ++k) {
        double a = mv[k - 1], b = dv[k - 1];
        out.metric.push_back(a);
        out.discrete.push_back(b);
        double rhs = 0.5 * kPi * kPi * b;
        out.ratio.push_back(k >= 2 ? a / rhs : 0.0);
        if (a > rhs + 1e-9) out.holds = false;
    }
    return out;
}

}  // namespace qgs
