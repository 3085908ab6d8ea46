#pragma once

#include <array>
#include <vector>

namespace qgs {

struct Point2 {
    double x = 0;
    double y = 0;
};

// Delaunay triangulation by incremental insertion (Bowyer-Watson) with
// extended-precision in-circle tests.  Points must be distinct; returns
// counterclockwise triangles as vertex index triples.
std::vector<std::array<int, 3>> delaunay_triangulate(const std::vector<Point2>& pts);

// Indices of the convex hull in counterclockwise order (monotone chain).
std::vector<int> convex_hull(const std::vector<Point2>& pts);

}  // namespace qgs
