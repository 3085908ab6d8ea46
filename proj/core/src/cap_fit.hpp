#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qgs/error.hpp"
#include "qgs/packing.hpp"

namespace qgs::detail {

// Cap through three sphere points whose interior contains `inside`.
inline SphericalCap cap_from_points(const Eigen::Vector3d& w1, const Eigen::Vector3d& w2,
                                    const Eigen::Vector3d& w3, const Eigen::Vector3d& inside) {
    Eigen::Vector3d n = (w2 - w1).cross(w3 - w1);
    double nn = n.norm();
    require(nn > 1e-300, "cap fit: boundary points nearly collinear");
    n /= nn;
    double hplane = n.dot(w1);
    if (n.dot(inside) < hplane) {
        n = -n;
        hplane = -hplane;
    }
    SphericalCap cap;
    cap.p = n;
    double th = std::acos(std::clamp(hplane, -1.0, 1.0));
    cap.r = 2.0 * std::sin(0.5 * th);
    return cap;
}

}  // namespace qgs::detail
