#include <cmath>
#include <numbers>

#include "qgs/metric.hpp"

namespace qgs {

TestFunctionEmbedding::TestFunctionEmbedding(const MetricGraph& g, Eigen::MatrixXcd vertex_values)
    : g_(&g), f_(std::move(vertex_values)) {
    require(g.graph().is_simple(), "test function embedding: graph must be simple (subdivide first)");
    require(f_.rows() == g.graph().num_vertices(), "test function embedding: one row per vertex required");
    require(f_.cols() >= 1, "test function embedding: dimension must be >= 1");
}

double TestFunctionEmbedding::norm_sq() const {
    double s = 0;
    for (int e = 0; e < g_->graph().num_edges(); ++e) {
        const Edge& ed = g_->graph().edge(e);
        auto fi = f_.row(ed.u), ft = f_.row(ed.v);
        double cross = fi.dot(ft).real();  // Re <f_i, f_t>
        s += g_->length(e) / 8.0 * (3.0 * fi.squaredNorm() + 2.0 * cross + 3.0 * ft.squaredNorm());
    }
    return s;
}

double TestFunctionEmbedding::energy() const {
    double s = 0;
    for (int e = 0; e < g_->graph().num_edges(); ++e) {
        const Edge& ed = g_->graph().edge(e);
        s += (f_.row(ed.u) - f_.row(ed.v)).squaredNorm() / g_->length(e);
    }
    constexpr double pi = std::numbers::pi;
    return pi * pi / 8.0 * s;
}

double TestFunctionEmbedding::discrete_norm_sq() const {
    double s = 0;
    for (int v = 0; v < g_->graph().num_vertices(); ++v) s += g_->metric_degree(v) * f_.row(v).squaredNorm();
    return s;
}

Eigen::VectorXcd TestFunctionEmbedding::value(int edge, double x) const {
    const Edge& ed = g_->graph().edge(edge);
    double c = std::cos(std::numbers::pi * x / g_->length(edge));
    return 0.5 * (f_.row(ed.u) + f_.row(ed.v)).transpose() + 0.5 * c * (f_.row(ed.u) - f_.row(ed.v)).transpose();
}

Eigen::VectorXcd TestFunctionEmbedding::derivative(int edge, double x) const {
    const Edge& ed = g_->graph().edge(edge);
    double l = g_->length(edge);
    double s = std::sin(std::numbers::pi * x / l);
    return -0.5 * std::numbers::pi / l * s * (f_.row(ed.u) - f_.row(ed.v)).transpose();
}

TestFunctionEmbedding embed_test_function(const MetricGraph& g, const Eigen::MatrixXcd& vertex_values) {
    return TestFunctionEmbedding(g, vertex_values);
}

}  // namespace qgs
