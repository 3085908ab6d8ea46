// Microbenchmarks for the hot paths: characteristic-matrix singular values,
// dense eigensolves, finite-element eigenvalue counting, Delaunay
// triangulation, and circle packing.

#include <benchmark/benchmark.h>

#include "qgs/delaunay.hpp"
#include "qgs/discrete.hpp"
#include "qgs/generators.hpp"
#include "qgs/metric.hpp"
#include "qgs/packing.hpp"

namespace {

using namespace qgs;

void BM_SecularSigmaMin(benchmark::State& state) {
    GeneratedGraph g = make_star(static_cast<int>(state.range(0)), 1.0);
    SecularSystem sys(g.metric);
    double k = 1.234;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys.sigma_min(k));
        k += 1e-6;  // avoid solver-internal caching effects
    }
}
BENCHMARK(BM_SecularSigmaMin)->Arg(8)->Arg(32);

void BM_SecularGap(benchmark::State& state) {
    GeneratedGraph g = make_binary_tree(static_cast<int>(state.range(0)), false);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_secular(g.metric, 2));
}
BENCHMARK(BM_SecularGap)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
    GeneratedGraph g = make_complete(static_cast<int>(state.range(0)));
    WeightedGraph w = comparison_weights(g.metric);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(w));
}
BENCHMARK(BM_DenseSpectrum)->Arg(10)->Arg(30);

void BM_FemCount(benchmark::State& state) {
    GeneratedGraph g = make_binary_tree(static_cast<int>(state.range(0)), false);
    double h = g.metric.min_length() / 64;
    for (auto _ : state) benchmark::DoNotOptimize(fem_count_below(g.metric, h, 10.0));
}
BENCHMARK(BM_FemCount)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Delaunay(benchmark::State& state) {
    Rng rng(7);
    std::vector<Point2> pts;
    for (int i = 0; i < state.range(0); ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    for (auto _ : state) benchmark::DoNotOptimize(delaunay_triangulate(pts));
}
BENCHMARK(BM_Delaunay)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PackPlanar(benchmark::State& state) {
    GeneratedGraph g = make_random_planar(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(pack_planar(g.metric.graph(), *g.embedding));
}
BENCHMARK(BM_PackPlanar)->Arg(12)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
