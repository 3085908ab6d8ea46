// File formats: graph JSON round trips, parse diagnostics, numeric formatting,
// and byte-level determinism of serialized artifacts.

#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "qgs/format.hpp"
#include "qgs/generators.hpp"
#include "qgs/graph_json.hpp"
#include "qgs/metric.hpp"
#include "qgs/spectrum.hpp"

using namespace qgs;

TEST_CASE("graph json round trip preserves structure and attributes") {
    GeneratedGraph cyc = make_cycle(4, 0.75);
    GraphJsonFields fields;
    std::vector<double> m = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> mu = {0.5, 0.5, 2.0, 2.0};
    const auto& lens = cyc.metric.lengths();
    fields.m = &m;
    fields.mu = &mu;
    fields.lengths = &lens;
    fields.embedding = &*cyc.embedding;
    fields.genus = 0;
    std::string text = graph_to_json(cyc.metric.graph(), fields);

    GraphInput in = parse_graph_json(text);
    CHECK(in.graph.num_vertices() == 4);
    CHECK(in.graph.num_edges() == 4);
    CHECK(in.has_m);
    CHECK(in.has_mu);
    CHECK(in.has_lengths);
    CHECK_FALSE(in.has_omega);
    CHECK(in.m == m);
    CHECK(in.mu == mu);
    CHECK(in.lengths == lens);
    REQUIRE(in.embedding.has_value());
    CHECK(in.embedding->genus() == 0);
    CHECK(in.embedding->num_faces() == 2);
    REQUIRE(in.declared_genus.has_value());
    CHECK(*in.declared_genus == 0);

    // serializing the parsed input again gives identical bytes
    GraphJsonFields again;
    again.m = &in.m;
    again.mu = &in.mu;
    again.lengths = &in.lengths;
    again.embedding = &*in.embedding;
    again.genus = in.declared_genus;
    CHECK(graph_to_json(in.graph, again) == text);
}

TEST_CASE("absent attributes default to one and flags stay false") {
    std::string text = R"({
        "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"id": "e", "source": "a", "target": "b"}]
    })";
    GraphInput in = parse_graph_json(text);
    CHECK_FALSE(in.has_m);
    CHECK_FALSE(in.has_lengths);
    CHECK(in.m == std::vector<double>{1.0, 1.0});
    CHECK(in.lengths == std::vector<double>{1.0});
    CHECK_FALSE(in.embedding.has_value());
    CHECK_FALSE(in.declared_genus.has_value());
    CHECK(in.metric().total_length() == 1.0);
}

TEST_CASE("parse errors carry usable messages") {
    CHECK_THROWS_AS(parse_graph_json("not json"), Error);
    CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), Error);  // vertices missing
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [{"id": "a"}], "edges": [
        {"id": "e", "source": "a", "target": "zz"}]})"),
                    Error);  // unknown endpoint
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [
        {"id": "e", "source": "a", "target": "b", "length": -2}]})"),
                    Error);  // non-positive length
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [
        {"id": "e", "source": "a", "target": "b"}],
        "embedding": {"genus": 0, "faces": [["e"], ["-e"]]}})"),
                    Error);  // faces are not closed walks
}

TEST_CASE("signed face ids survive a round trip on a loop") {
    GeneratedGraph lp = make_loop(2.5);
    GraphJsonFields fields;
    const auto& lens = lp.metric.lengths();
    fields.lengths = &lens;
    fields.embedding = &*lp.embedding;
    fields.genus = 0;
    std::string text = graph_to_json(lp.metric.graph(), fields);
    GraphInput in = parse_graph_json(text);
    REQUIRE(in.embedding.has_value());
    CHECK(in.embedding->num_faces() == 2);
    CHECK(in.metric().total_length() == 2.5);
}

TEST_CASE("numeric formatting round-trips doubles exactly") {
    for (double x : {0.1, 1.0 / 3.0, 3.141592653589793, 1e-300, 123456789.123456789, -0.0, 2e17}) {
        CHECK(std::strtod(fmt_double(x).c_str(), nullptr) == x);
    }
    CHECK(fmt_double(1.0) == "1");
    CHECK(fmt_double(0.5) == "0.5");
}

TEST_CASE("spectrum serialization has fixed layout") {
    Spectrum s = Spectrum::from_sorted({0.0, 2.0, 2.0, 4.0}, "dense", 1e-15);
    std::string csv_plain = spectrum_to_csv(s, false);
    CHECK(csv_plain == "k,lambda\n1,0\n2,2\n3,2\n4,4\n");
    std::string csv_full = spectrum_to_csv(s, true);
    CHECK(csv_full.rfind("k,lambda,multiplicity,solver\n", 0) == 0);
    CHECK(csv_full.find("2,2,2,dense") != std::string::npos);

    std::string json = spectrum_to_json(s);
    CHECK(json.find("\"values\"") != std::string::npos);
    CHECK(json.find("\"multiplicities\"") != std::string::npos);
    CHECK(json.find("\"solver\":\"dense\"") != std::string::npos);
    CHECK(json.find("\"residual\"") != std::string::npos);
}

TEST_CASE("serialized artifacts are byte-identical run to run") {
    for (int round = 0; round < 2; ++round) {
        GeneratedGraph a = make_random_planar(14, 42);
        GeneratedGraph b = make_random_planar(14, 42);
        GraphJsonFields fa, fb;
        const auto& la = a.metric.lengths();
        const auto& lb = b.metric.lengths();
        fa.lengths = &la;
        fb.lengths = &lb;
        fa.embedding = &*a.embedding;
        fb.embedding = &*b.embedding;
        fa.genus = fb.genus = 0;
        CHECK(graph_to_json(a.metric.graph(), fa) == graph_to_json(b.metric.graph(), fb));

        Spectrum sa = eigenvalues_secular(a.metric, 5);
        Spectrum sb = eigenvalues_secular(b.metric, 5);
        CHECK(spectrum_to_csv(sa, true) == spectrum_to_csv(sb, true));
    }
}

TEST_CASE("text files write and read back") {
    std::string path = "qgs_io_test_tmp.txt";
    write_text_file(path, "line1\nline2\n");
    CHECK(read_text_file(path) == "line1\nline2\n");
    CHECK_THROWS_AS(read_text_file("definitely/not/a/file.json"), Error);
    std::remove(path.c_str());
}
