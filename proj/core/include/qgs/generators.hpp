#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgs/graph.hpp"

namespace qgs {

// Deterministic random source: the engine state and the bit-to-double mapping
// are fixed here so identical seeds give identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    // Log-uniform in [a, b], 0 < a < b.
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

private:
    std::mt19937_64 eng_;
};

enum class LengthProfile { equilateral, dyadic_decay, log_uniform };

LengthProfile parse_length_profile(const std::string& name);
std::string length_profile_name(LengthProfile p);

// One generated instance: metric structure, an embedding when the family
// constructs one, and the declared genus otherwise.
struct GeneratedGraph {
    MetricGraph metric;
    std::optional<PlanarEmbedding> embedding;
    int genus = 0;
    std::string name;
};

// Equilateral star with n edges of the given length; center "c", genus-0
// tree embedding.
GeneratedGraph make_star(int n_edges, double edge_length = 1.0);
// Path on n vertices.
GeneratedGraph make_path(int n_vertices, double edge_length = 1.0);
// Cycle on n vertices; two-face embedding.
GeneratedGraph make_cycle(int n_vertices, double edge_length = 1.0);
// Single edge of the given length.
GeneratedGraph make_interval(double length = 1.0);
// Single vertex with one loop.
GeneratedGraph make_loop(double length = 1.0);
// Complete graph K_n.  K_4 and smaller carry planar embeddings; for n >= 5
// the genus field holds the declared orientable genus ceil((n-3)(n-4)/12)
// (documented external input, not computed here) and no embedding is set.
GeneratedGraph make_complete(int n, double edge_length = 1.0);
// Complete rooted binary tree of height h: root of degree 2, inner vertices
// of degree 3.  Edge lengths are 1 (equilateral) or 2^-gen(e) (dyadic decay),
// where gen(e) is the generation of the child endpoint.
GeneratedGraph make_binary_tree(int height, bool dyadic);
// Delaunay triangulation of n seeded random points in the unit disk with a
// minimum-separation rejection rule; unit edge lengths, full triangulation
// embedding (all inner faces counterclockwise, outer hull face clockwise).
GeneratedGraph make_random_planar(int n_points, std::uint64_t seed);

// Random connected simple graph: a random recursive spanning tree plus extra
// distinct non-parallel edges, at most max_edges in total.  Lengths follow
// the profile (dyadic decay is not defined here).
MetricGraph make_random_connected(int max_vertices, int max_edges, LengthProfile profile, Rng& rng);

// Euler-tour face walk of a tree (every edge once in each direction), the
// single face of its genus-0 embedding.
std::vector<FaceStep> tree_face_walk(const CombinatorialGraph& g);

}  // namespace qgs
