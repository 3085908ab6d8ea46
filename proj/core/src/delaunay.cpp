#include <algorithm>
#include <cmath>
#include <map>

#include "qgs/delaunay.hpp"
#include "qgs/error.hpp"

namespace qgs {

namespace {

long double orient2d(const Point2& a, const Point2& b, const Point2& c) {
    long double abx = (long double)b.x - a.x, aby = (long double)b.y - a.y;
    long double acx = (long double)c.x - a.x, acy = (long double)c.y - a.y;
    return abx * acy - aby * acx;
}

// > 0 iff d lies inside the circumcircle of the CCW triangle (a, b, c).
long double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    long double adx = (long double)a.x - d.x, ady = (long double)a.y - d.y;
    long double bdx = (long double)b.x - d.x, bdy = (long double)b.y - d.y;
    long double cdx = (long double)c.x - d.x, cdy = (long double)c.y - d.y;
    long double ad = adx * adx + ady * ady;
    long double bd = bdx * bdx + bdy * bdy;
    long double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

}  // namespace

std::vector<std::array<int, 3>> delaunay_triangulate(const std::vector<Point2>& pts) {
    int n = static_cast<int>(pts.size());
    require(n >= 3, "triangulation needs at least three points");

    // Enclosing super-triangle, proportional to the data diameter.
    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const Point2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
    std::vector<Point2> v(pts);
    v.push_back({cx - 30 * span, cy - 10 * span});
    v.push_back({cx + 30 * span, cy - 10 * span});
    v.push_back({cx, cy + 30 * span});
    int s0 = n, s1 = n + 1, s2 = n + 2;

    std::vector<std::array<int, 3>> tris = {{s0, s1, s2}};
    for (int p = 0; p < n; ++p) {
        std::vector<std::array<int, 3>> keep, bad;
        for (const auto& t : tris) {
            if (incircle(v[t[0]], v[t[1]], v[t[2]], v[p]) > 0)
                bad.push_back(t);
            else
                keep.push_back(t);
        }
        require(!bad.empty(), "triangulation insertion failed (duplicate point?)");
        // Cavity boundary: directed edges of bad triangles whose reverse is
        // not used by another bad triangle.
        std::map<std::pair<int, int>, int> count;
        for (const auto& t : bad)
            for (int i = 0; i < 3; ++i) {
                int a = t[i], b = t[(i + 1) % 3];
                count[{std::min(a, b), std::max(a, b)}]++;
            }
        tris = keep;
        for (const auto& t : bad)
            for (int i = 0; i < 3; ++i) {
                int a = t[i], b = t[(i + 1) % 3];
                if (count[{std::min(a, b), std::max(a, b)}] == 1) tris.push_back({a, b, p});
            }
    }

    std::vector<std::array<int, 3>> out;
    for (const auto& t : tris) {
        if (t[0] >= n || t[1] >= n || t[2] >= n) continue;
        std::array<int, 3> tri = t;
        if (orient2d(v[tri[0]], v[tri[1]], v[tri[2]]) < 0) std::swap(tri[1], tri[2]);
        require(orient2d(v[tri[0]], v[tri[1]], v[tri[2]]) > 0, "degenerate (collinear) triangle");
        out.push_back(tri);
    }
    require(!out.empty(), "triangulation produced no triangles");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> convex_hull(const std::vector<Point2>& pts) {
    int n = static_cast<int>(pts.size());
    require(n >= 3, "hull needs at least three points");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    std::vector<int> hull(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {  // lower
        int i = idx[ii];
        while (k >= 2 && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) k--;
        hull[k++] = i;
    }
    for (int ii = n - 2, lower = k + 1; ii >= 0; --ii) {  // upper
        int i = idx[ii];
        while (k >= lower && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) k--;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace qgs
