#include <algorithm>
#include <cmath>
#include <numbers>

#include "cap_fit.hpp"
#include "qgs/packing.hpp"

namespace qgs {

double SphericalCap::area() const { return std::numbers::pi * r * r; }

double angular_distance(const SphericalCap& a, const SphericalCap& b) {
    double c = a.p.dot(b.p);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Eigen::Vector3d stereographic_project(const Eigen::Vector3d& y, const Eigen::Vector3d& beta) {
    double denom = (beta + y).squaredNorm();
    require(denom > 1e-300, "stereographic projection: point opposite the pole");
    return 4.0 / denom * (beta + y) - beta;
}

Eigen::Vector3d stereographic_unproject(const Eigen::Vector3d& z, const Eigen::Vector3d& beta) {
    double denom = 1.0 + beta.dot(z);
    require(denom > 1e-14, "stereographic projection: preimage of the antipode is at infinity");
    return 2.0 / denom * (beta + z) - beta;
}

Eigen::Vector3d mobius_point(const Eigen::Vector3d& z, const Eigen::Vector3d& alpha) {
    double a = alpha.norm();
    if (a == 0.0) return z;
    require(a < 1.0, "moebius transform: |alpha| must be < 1");
    Eigen::Vector3d beta = alpha / a;
    double lambda = 1.0 - a;
    // the antipode of the pole is the fixed point at infinity
    if ((z + beta).norm() < 1e-13) return -beta;
    Eigen::Vector3d y = stereographic_unproject(z, beta);
    Eigen::Vector3d dilated = beta + lambda * (y - beta);
    return stereographic_project(dilated, beta);
}

namespace {

// Any unit vector orthogonal to p, deterministic.
Eigen::Vector3d orthogonal_unit(const Eigen::Vector3d& p) {
    Eigen::Vector3d c = std::abs(p.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    Eigen::Vector3d t = p.cross(c);
    return t / t.norm();
}

}  // namespace

SphericalCap mobius_deform(const SphericalCap& cap, const Eigen::Vector3d& alpha) {
    if (alpha.norm() == 0.0) return cap;
    double theta = cap.theta();
    Eigen::Vector3d t1 = orthogonal_unit(cap.p);
    Eigen::Vector3d t2 = cap.p.cross(t1);
    Eigen::Vector3d beta = alpha / alpha.norm();

    // three boundary points, rotated until none of them sits at the antipode
    // of the deformation pole
    auto boundary = [&](double phi) -> Eigen::Vector3d {
        return std::cos(theta) * cap.p + std::sin(theta) * (std::cos(phi) * t1 + std::sin(phi) * t2);
    };
    double off = 0.0;
    Eigen::Vector3d z1, z2, z3;
    for (int tries = 0; tries < 32; ++tries, off += 0.37) {
        z1 = boundary(off);
        z2 = boundary(off + 2.0 * std::numbers::pi / 3.0);
        z3 = boundary(off + 4.0 * std::numbers::pi / 3.0);
        double safe = 1e-7;
        if ((z1 + beta).norm() > safe && (z2 + beta).norm() > safe && (z3 + beta).norm() > safe) break;
    }
    Eigen::Vector3d w1 = mobius_point(z1, alpha);
    Eigen::Vector3d w2 = mobius_point(z2, alpha);
    Eigen::Vector3d w3 = mobius_point(z3, alpha);

    // interior sample fixing which side of the image circle is the cap
    Eigen::Vector3d inside = cap.p;
    if ((inside + beta).norm() < 1e-9)
        inside = std::cos(0.5 * theta) * cap.p + std::sin(0.5 * theta) * t1;
    Eigen::Vector3d wi = mobius_point(inside, alpha);

    return detail::cap_from_points(w1, w2, w3, wi);
}

double smoothing_weight(const Eigen::Vector3d& alpha, const SphericalCap& cap, double delta) {
    // max_{z in C} |alpha - z|: the farthest cap point from alpha lies at
    // angle min(gamma + theta, pi) from alpha, gamma = angle(alpha, p)
    double a = alpha.norm();
    if (a == 0.0) return 1.0;
    double gamma = std::acos(std::clamp(alpha.dot(cap.p) / a, -1.0, 1.0));
    double ang = std::min(gamma + cap.theta(), std::numbers::pi);
    double dist = std::sqrt(std::max(0.0, 1.0 + a * a - 2.0 * a * std::cos(ang)));
    if (dist < 2.0 - delta) return 1.0;
    return std::max(0.0, (2.0 - dist) / delta);
}

}  // namespace qgs
