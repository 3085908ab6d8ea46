// Family sweeps: deterministic parallel evaluation and the canned studies.

#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "qgs/experiment.hpp"

using namespace qgs;

TEST_CASE("family sweep output is independent of the thread count") {
    ExperimentSpec spec;
    spec.family = "star";
    spec.size_min = 3;
    spec.size_max = 6;
    spec.bound_ids = {"comparison", "tree-diameter"};

    spec.jobs = 1;
    std::vector<LabeledReport> serial = run_family_bounds(spec);
    spec.jobs = 4;
    std::vector<LabeledReport> parallel = run_family_bounds(spec);

    REQUIRE(serial.size() == 8);  // 4 instances x 2 bounds
    CHECK(reports_to_csv(serial) == reports_to_csv(parallel));
    CHECK(serial[0].instance == "star-3");
    CHECK(serial[0].report.bound_id == "comparison");
    CHECK(serial[1].report.bound_id == "tree-diameter");
}

TEST_CASE("csv rows carry the instance and follow the bound header") {
    ExperimentSpec spec;
    spec.family = "cycle";
    spec.size_min = 4;
    spec.size_max = 4;
    spec.bound_ids = {"metric-planar"};
    std::vector<LabeledReport> rows = run_family_bounds(spec);
    std::string csv = reports_to_csv(rows);
    CHECK(csv.rfind("instance,bound_id,k,lhs,rhs,ratio,verdict,constant,hypothesis_ok\n", 0) == 0);
    CHECK(csv.find("cycle-4,metric-planar,2,") != std::string::npos);

    std::string json = reports_to_json(rows);
    CHECK(json.find("\"instance\": \"cycle-4\"") != std::string::npos);
}

TEST_CASE("default bounds include the tree bound exactly for trees") {
    auto has = [](const std::vector<std::string>& ids, const std::string& id) {
        for (const auto& s : ids)
            if (s == id) return true;
        return false;
    };
    CHECK(has(default_bounds(make_star(3)), "tree-diameter"));
    CHECK_FALSE(has(default_bounds(make_cycle(4)), "tree-diameter"));
    CHECK(has(default_bounds(make_cycle(4)), "comparison"));
    CHECK(has(default_bounds(make_cycle(4)), "metric-planar"));
}

TEST_CASE("star sweep attains the comparison constant on every row") {
    std::vector<LabeledReport> rows = star_sweep_report();
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.report.verdict == Verdict::holds);
        CHECK(row.report.ratio ==
              doctest::Approx(std::numbers::pi * std::numbers::pi / 2).epsilon(1e-8));
        CHECK(row.report.note.find("sharp") != std::string::npos);
    }
}

TEST_CASE("weight sweep documents the failing hypothesis") {
    std::vector<LabeledReport> rows = k4_weight_sweep_report();
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.report.verdict == Verdict::report_only);
        CHECK_FALSE(row.report.hypotheses_ok());
    }
    // at weight 100 the measured constant sails past the protected constant 8
    CHECK(rows[2].instance.find("100") != std::string::npos);
    CHECK(rows[2].report.ratio > 8.0);
    CHECK(rows[0].report.ratio < 8.0);
}

TEST_CASE("exit code reflects violations only") {
    std::vector<LabeledReport> rows = star_sweep_report();
    CHECK(worst_exit_code(rows) == 0);
    rows[0].report.verdict = Verdict::violated;
    CHECK(worst_exit_code(rows) == 2);
    rows[0].report.verdict = Verdict::report_only;
    CHECK(worst_exit_code(rows) == 0);
}

TEST_CASE("unknown spec values are rejected") {
    ExperimentSpec spec;
    spec.family = "no-such-family";
    CHECK_THROWS_AS(run_family_bounds(spec), Error);
    ExperimentSpec bad_bound;
    bad_bound.family = "star";
    bad_bound.size_min = bad_bound.size_max = 3;
    bad_bound.bound_ids = {"no-such-bound"};
    CHECK_THROWS_AS(run_family_bounds(bad_bound), Error);
}
