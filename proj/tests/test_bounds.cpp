// Eigenvalue bounds: exact-constant verdicts against hand-computed spectra and
// generic-constant reports against closed-form implied constants.

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qgs/bounds.hpp"
#include "qgs/discrete.hpp"
#include "qgs/generators.hpp"
#include "qgs/graph.hpp"
#include "qgs/metric.hpp"

using namespace qgs;

namespace {

constexpr double kPi = std::numbers::pi;

WeightedGraph unit_weighted(const CombinatorialGraph& g) {
    return WeightedGraph(g, std::vector<double>(g.num_vertices(), 1.0),
                         std::vector<double>(g.num_edges(), 1.0));
}

}  // namespace

TEST_CASE("degree-over-size bound holds on planar unit-weight graphs") {
    // K_4: lambda_2 = 4 against 8 * 3 / 4 = 6
    BoundReport r = bound_spielman_teng(unit_weighted(make_complete(4).metric.graph()), true);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r.rhs == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(16.0 / 3.0).epsilon(1e-10));
    CHECK(r.constant == 8.0);
    CHECK(r.exact_constant);
    CHECK(r.hypotheses_ok());

    // star: lambda_2 = 1 against 8 n / (n + 1)
    BoundReport s = bound_spielman_teng(unit_weighted(make_star(6).metric.graph()), true);
    CHECK(s.verdict == Verdict::holds);
    CHECK(s.lhs == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.rhs == doctest::Approx(48.0 / 7.0).epsilon(1e-12));

    // withholding the planarity attestation downgrades, values unchanged
    BoundReport t = bound_spielman_teng(unit_weighted(make_complete(4).metric.graph()), false);
    CHECK(t.verdict == Verdict::report_only);
    CHECK(t.lhs == doctest::Approx(r.lhs).epsilon(1e-12));

    // non-unit weights fail the unit-weights hypothesis
    WeightedGraph w(make_path(3).metric.graph(), {2.0, 1.0, 1.0}, {1.0, 1.0});
    CHECK(bound_spielman_teng(w, true).verdict == Verdict::report_only);
}

TEST_CASE("weighted planar bound needs the mass-splitting condition") {
    // path on 8 vertices, unit weights: condition holds, bound asserted
    BoundReport ok = bound_weighted_planar(unit_weighted(make_path(8).metric.graph()), true);
    CHECK(ok.verdict == Verdict::holds);
    CHECK(ok.hypotheses_ok());
    CHECK(ok.rhs == doctest::Approx(8.0 * 2.0 / 8.0).epsilon(1e-12));

    // K_4 with a heavy vertex: hypothesis fails for every a >= 1, and at
    // a = 100 the measured constant exceeds the would-be constant 8
    CombinatorialGraph k4 = make_complete(4).metric.graph();
    WeightedGraph heavy(k4, {100.0, 1.0, 1.0, 1.0}, std::vector<double>(6, 1.0));
    BoundReport bad = bound_weighted_planar(heavy, true);
    CHECK(bad.verdict == Verdict::report_only);
    CHECK_FALSE(bad.hypotheses_ok());
    CHECK(bad.lhs == doctest::Approx(103.0 / 100.0).epsilon(1e-10));
    CHECK(bad.ratio == doctest::Approx((103.0 / 100.0) * 103.0 / 3.0).epsilon(1e-10));
    CHECK(bad.ratio > 8.0);
}

TEST_CASE("metric planar bound picks its constant from the geometry") {
    // C_6 equilateral: simple, neighborhood condition holds: constant 2 pi^2
    BoundReport c6 = bound_metric_planar(make_cycle(6).metric, true);
    CHECK(c6.constant == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
    CHECK(c6.verdict == Verdict::holds);
    CHECK(c6.lhs == doctest::Approx(kPi * kPi / 9).epsilon(1e-9));
    CHECK(c6.rhs == doctest::Approx(2 * kPi * kPi * 2.0 / 6.0).epsilon(1e-12));
    CHECK(c6.ratio == doctest::Approx(kPi * kPi / 3).epsilon(1e-9));

    // single interval: d^l(u) + d^l(v) = 2L fails: fallback 16 pi^2
    BoundReport iv = bound_metric_planar(make_interval(1.0).metric, true);
    CHECK(iv.constant == doctest::Approx(16 * kPi * kPi).epsilon(1e-15));
    CHECK(iv.verdict == Verdict::holds);
    CHECK(iv.lhs == doctest::Approx(kPi * kPi).epsilon(1e-9));
    CHECK(iv.note.find("fallback") != std::string::npos);

    // loop: not simple: fallback 16 pi^2, lambda_2 = 4 pi^2 <= 32 pi^2
    BoundReport lp = bound_metric_planar(make_loop(1.0).metric, true);
    CHECK(lp.constant == doctest::Approx(16 * kPi * kPi).epsilon(1e-15));
    CHECK(lp.verdict == Verdict::holds);
    CHECK(lp.lhs == doctest::Approx(4 * kPi * kPi).epsilon(1e-9));
    CHECK(lp.rhs == doctest::Approx(32 * kPi * kPi).epsilon(1e-12));
}

TEST_CASE("comparison bound reports the worst index and is sharp for stars") {
    BoundReport r = bound_comparison(make_star(4, 0.25).metric);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.constant == doctest::Approx(kPi * kPi / 2).epsilon(1e-15));
    CHECK(r.k == 5);  // the top pair attains the constant
    CHECK(r.ratio == doctest::Approx(kPi * kPi / 2).epsilon(1e-8));
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-8));
}

TEST_CASE("tree bound is sharp on stars and paths and rejects cycles") {
    BoundReport star = bound_tree_diameter(make_star(5, 0.2).metric);
    CHECK(star.verdict == Verdict::holds);
    CHECK(star.rhs == doctest::Approx(kPi * kPi / 0.16).epsilon(1e-12));
    CHECK(star.ratio == doctest::Approx(1.0).epsilon(1e-9));

    BoundReport path = bound_tree_diameter(make_path(5, 0.5).metric);
    CHECK(path.verdict == Verdict::holds);
    CHECK(path.ratio == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(bound_tree_diameter(make_loop(1.0).metric), Error);
}

TEST_CASE("normalized genus report measures the implied constant") {
    // K_5, unit weights: lambda_2 = 5/4, d^w 4, sum 10, genus 1, k 2:
    // form = 4 * 3 / 10, implied constant 25/24
    GeneratedGraph k5 = make_complete(5);
    CHECK(k5.genus == 1);
    BoundReport r = bound_normalized_genus(k5.metric.graph(), std::vector<double>(10, 1.0), k5.genus, 2);
    CHECK(r.verdict == Verdict::report_only);
    CHECK_FALSE(r.exact_constant);
    CHECK(r.rhs == 0.0);
    CHECK(r.ratio == doctest::Approx(25.0 / 24.0).epsilon(1e-10));
    CHECK(r.constant == doctest::Approx(r.ratio).epsilon(1e-15));

    // C_6: lambda_2 = 1/2 against 2 * 2 / 6
    BoundReport c =
        bound_normalized_genus(make_cycle(6).metric.graph(), std::vector<double>(6, 1.0), 0, 2);
    CHECK(c.ratio == doctest::Approx(0.75).epsilon(1e-10));

    CHECK_THROWS_AS(
        bound_normalized_genus(k5.metric.graph(), std::vector<double>(10, 1.0), -1, 2), Error);
    CHECK_THROWS_AS(bound_normalized_genus(k5.metric.graph(), std::vector<double>(10, 1.0), 1, 9),
                    Error);
}

TEST_CASE("metric genus report on loop and cycle") {
    // loop: lambda_2 = 4 pi^2, d^l 2, l_min = L = 1, g 0, k 2: form 4
    BoundReport lp = bound_metric_genus(make_loop(1.0).metric, 0, 2);
    CHECK(lp.ratio == doctest::Approx(kPi * kPi).epsilon(1e-9));
    // C_6: lambda_2 = pi^2/9, form = 2 * 2 / 6
    BoundReport c6 = bound_metric_genus(make_cycle(6).metric, 0, 2);
    CHECK(c6.ratio == doctest::Approx(kPi * kPi / 6).epsilon(1e-9));
    CHECK(c6.verdict == Verdict::report_only);
}

TEST_CASE("betti genus report checks the window and the threshold") {
    // loop at k = 2: n = 2, each new length 1/3 in [1/4, 1/2);
    // lambda_2 = 4 pi^2 against 2 * 2 * 2 / 1
    BoundReport lp = bound_betti_genus(make_loop(1.0).metric, 0, 2);
    CHECK(lp.ratio == doctest::Approx(kPi * kPi / 2).epsilon(1e-9));
    CHECK(lp.hypotheses_ok());

    // C_4 at the threshold k = 4: lambda_4 = pi^2 against 2 * 4 * 4 / 16
    BoundReport c4 = bound_betti_genus(make_cycle(4).metric, 0, 4);
    CHECK(c4.ratio == doctest::Approx(kPi * kPi / 2).epsilon(1e-9));
    CHECK(c4.hypotheses_ok());

    // below the threshold the construction is undefined
    CHECK_THROWS_AS(bound_betti_genus(make_cycle(4).metric, 0, 3), Error);
}

TEST_CASE("surface construction yields legal cone angles for unit weights") {
    GeneratedGraph c6 = make_cycle(6);
    SurfaceAngles s =
        surface_construction_report(c6.metric.graph(), std::vector<double>(6, 1.0));
    CHECK(s.all_angles_defined);
    CHECK(s.cone_angles_ok);
    double alpha = 0.5 * std::asin(kPi / 4.0);
    for (double a : s.alpha) CHECK(a == doctest::Approx(alpha).epsilon(1e-14));
    for (double th : s.theta) CHECK(th == doctest::Approx(4 * alpha).epsilon(1e-13));
    CHECK(s.total_measure == doctest::Approx(6 * kPi / 4.0).epsilon(1e-12));

    // single edge: asin argument pi/2 > 1, so the angle is undefined
    SurfaceAngles iv =
        surface_construction_report(make_interval(1.0).metric.graph(), {1.0});
    CHECK_FALSE(iv.all_angles_defined);
    CHECK_FALSE(iv.cone_angles_ok);
}

TEST_CASE("reports serialize to csv and json") {
    std::vector<BoundReport> rs = {bound_tree_diameter(make_star(3, 1.0).metric),
                                   bound_metric_genus(make_loop(1.0).metric, 0, 2)};
    std::string csv = bounds_to_csv(rs);
    CHECK(csv.rfind("bound_id,k,lhs,rhs,ratio,verdict,constant,hypothesis_ok\n", 0) == 0);
    CHECK(csv.find("tree-diameter,2,") != std::string::npos);
    CHECK(csv.find("report-only") != std::string::npos);

    std::string json = bounds_to_json(rs);
    CHECK(json.find("\"bound_id\": \"tree-diameter\"") != std::string::npos);
    CHECK(json.find("\"hypotheses\"") != std::string::npos);
    CHECK(json.find("\"verdict\": \"holds\"") != std::string::npos);
}
