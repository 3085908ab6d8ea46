#pragma once

#include <string>
#include <vector>

#include "qgs/graph.hpp"
#include "qgs/metric.hpp"

namespace qgs {

enum class Verdict { holds, violated, report_only };

std::string verdict_name(Verdict v);

struct HypothesisCheck {
    std::string name;
    bool ok = false;
    std::string witness;  // human-readable values behind the pass/fail
};

// One evaluated eigenvalue bound.  For exact-constant bounds `rhs` is the
// asserted value and `verdict` is holds/violated; generic-constant bounds only
// measure the implied constant lhs / (formula without constant) and always
// report.  Every verdict is re-derivable from the stored numbers.
struct BoundReport {
    std::string bound_id;
    int k = 2;            // eigenvalue index addressed by the bound
    double lhs = 0;       // measured eigenvalue (or worst ratio for families)
    double rhs = 0;       // bound value; 0 for generic-constant forms
    double constant = 0;  // constant in use: proven for exact bounds, measured otherwise
    double ratio = 0;     // lhs / (formula without constant)
    bool exact_constant = false;
    std::vector<HypothesisCheck> hypotheses;
    Verdict verdict = Verdict::report_only;
    std::string note;

    bool hypotheses_ok() const;
};

// Planarity cannot be decided from the weighted structure alone, so the
// planar bounds take a caller-attested flag (true when a genus-0 embedding
// was supplied or the generator is planar by construction).  A false flag
// downgrades the verdict to report-only instead of erroring.

// lambda_2(L) <= 8 d_max / |V| for simple planar graphs with unit weights.
BoundReport bound_spielman_teng(const WeightedGraph& g, bool planar);

// lambda_2(L_{m,mu}) <= 8 d^mu_max / m(V) for simple planar graphs whose
// vertex weight satisfies 2 (m(u) + m(v)) < m(V) on every edge; a failed
// hypothesis downgrades the report instead of erroring.
BoundReport bound_weighted_planar(const WeightedGraph& g, bool planar);

// lambda_2(Delta) <= 2 pi^2 d^mu_max / L when the graph is simple and
// d^l_u + d^l_v < L on every edge, and <= 16 pi^2 d^mu_max / L always
// (d^mu is the inverse-length degree).  Records which constant applied.
BoundReport bound_metric_planar(const MetricGraph& g, bool planar);

// lambda_k(Delta) <= (pi^2/2) lambda_k(L_{m,mu}) for every k up to the vertex
// count of the simple representative; reports the worst index.
BoundReport bound_comparison(const MetricGraph& g);

// Generic-constant reports: the measured implied constant is
// lhs / (formula without constant); never asserted.
BoundReport bound_normalized_genus(const CombinatorialGraph& g, const std::vector<double>& omega, int genus,
                                   int k);
BoundReport bound_metric_genus(const MetricGraph& g, int genus, int k);
// Requires k >= L/l_min - beta + 1; re-verifies spectrum invariance under the
// equalizing subdivision it is built on.
BoundReport bound_betti_genus(const MetricGraph& g, int genus, int k);

// lambda_2(Delta) <= pi^2 / diam^2 for metric trees (beta == 0).
BoundReport bound_tree_diameter(const MetricGraph& g);

// Flat-surface construction behind the genus bounds: isosceles triangle
// angles per edge, cone angles per vertex, and the induced measure.
struct SurfaceAngles {
    std::vector<double> alpha;          // per edge: (1/2) asin(pi w_e / (2 d^w_max))
    std::vector<bool> alpha_defined;    // asin argument within [-1, 1]
    std::vector<double> theta;          // per vertex: 2 sum of incident alpha
    std::vector<double> triangle_area;  // per edge: pi w_e / (4 d^w_max)
    double total_measure = 0;           // sum_e pi w_e / (2 d^w_max)
    bool all_angles_defined = false;
    bool cone_angles_ok = false;        // theta_v <= pi (+1e-12) for all v
};

SurfaceAngles surface_construction_report(const CombinatorialGraph& g, const std::vector<double>& omega);

std::string bounds_to_json(const std::vector<BoundReport>& reports);
// Header: bound_id,k,lhs,rhs,ratio,verdict,constant,hypothesis_ok
std::string bounds_to_csv(const std::vector<BoundReport>& reports);
std::string surface_to_json(const CombinatorialGraph& g, const SurfaceAngles& s);

}  // namespace qgs
