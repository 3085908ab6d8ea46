#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qgs/svg.hpp"

namespace qgs {

namespace {

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string plane_svg(const CirclePacking& packing) {
    double lo_x = 1e30, hi_x = -1e30, lo_y = 1e30, hi_y = -1e30;
    for (const PlaneCircle& c : packing.plane) {
        lo_x = std::min(lo_x, c.c.x() - c.rho);
        hi_x = std::max(hi_x, c.c.x() + c.rho);
        lo_y = std::min(lo_y, c.c.y() - c.rho);
        hi_y = std::max(hi_y, c.c.y() + c.rho);
    }
    double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(lo_x - pad) + " " +
                      num(lo_y - pad) + " " + num(hi_x - lo_x + 2 * pad) + " " +
                      num(hi_y - lo_y + 2 * pad) + "\">\n";
    out += "<g fill=\"none\" stroke-width=\"" + num(0.004 * (hi_x - lo_x)) + "\">\n";
    for (std::size_t i = 0; i < packing.plane.size(); ++i) {
        const PlaneCircle& c = packing.plane[i];
        bool is_aux = i < packing.aux.size() && packing.aux[i];
        out += "<circle cx=\"" + num(c.c.x()) + "\" cy=\"" + num(c.c.y()) + "\" r=\"" + num(c.rho) +
               std::string("\" stroke=\"") + (is_aux ? "#999" : "#1b4f9c") + "\"" +
               (is_aux ? " stroke-dasharray=\"0.02 0.02\"" : "") + "/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string sphere_svg(const CirclePacking& packing) {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.15 -1.15 2.3 2.3\">\n"
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"0.006\"/>\n"
        "<g fill=\"none\" stroke-width=\"0.006\">\n";
    for (std::size_t i = 0; i < packing.caps.size(); ++i) {
        const SphericalCap& cap = packing.caps[i];
        Eigen::Vector3d p = cap.p;
        Eigen::Vector3d any = std::abs(p.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
        Eigen::Vector3d u = p.cross(any).normalized();
        Eigen::Vector3d v = p.cross(u);
        double th = cap.theta();
        std::string path;
        for (int s = 0; s <= 64; ++s) {
            double t = 2 * std::numbers::pi * s / 64;
            Eigen::Vector3d z = std::cos(th) * p + std::sin(th) * (std::cos(t) * u + std::sin(t) * v);
            path += (s == 0 ? "M" : "L") + num(z.x()) + " " + num(-z.y());
        }
        bool back = p.z() < 0;
        bool is_aux = i < packing.aux.size() && packing.aux[i];
        out += "<path d=\"" + path + "Z\" stroke=\"" +
               (back ? "#c9d6e8" : (is_aux ? "#999" : "#1b4f9c")) + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace

std::string packing_to_svg(const CirclePacking& packing) {
    return packing.plane.empty() ? sphere_svg(packing) : plane_svg(packing);
}

}  // namespace qgs
