#pragma once
#include <algorithm>
#include <cmath>

#include "ballmetric/geometry.hpp"

namespace ballmetric {

/// Scale parameter of the shortcut metric, 0 < s <= 1.
struct ShortcutParam {
    double s{1.0};

    ShortcutParam() = default;
    explicit ShortcutParam(double value) : s(value) {
        if (!(value > 0.0) || value > 1.0)
            throw InvalidScaleError("ShortcutParam: scale must lie in (0, 1]");
    }
};

/// Branch angle alpha = arcsin((sqrt(2 - s^2) - s) / 2), in [0, pi/4).
///
/// alpha is exactly calibrated so that at central angle pi - 2*alpha the
/// straight chord and the antipodal route cost the same: cos(alpha) -
/// sin(alpha) = s.
inline double alpha(const ShortcutParam& sp) {
    return std::asin((std::sqrt(2.0 - sp.s * sp.s) - sp.s) / 2.0);
}

enum class Branch { Euclid, Shortcut };

struct ShortcutDistance {
    double value{0.0};
    Branch branch{Branch::Euclid};
};

/// The shortcut metric d^s on a sphere: the Euclidean chord for central
/// angles up to pi - 2*alpha, and 2*r*s plus the chord from the antipode
/// beyond that. Ties at the threshold take the Euclid branch (the two
/// branches agree there).
inline ShortcutDistance shortcut_distance(const SpherePose& pose, const ShortcutParam& sp,
                                          const Vec3& p, const Vec3& q) {
    const double theta = central_angle(pose, p, q); // validates on-sphere
    const double a = alpha(sp);
    if (theta <= kPi - 2.0 * a)
        return {euclid(p, q), Branch::Euclid};
    return {2.0 * pose.radius * sp.s + euclid(pose.center * 2.0 - p, q), Branch::Shortcut};
}

/// A radius t > 0 such that any two points of the d^s-ball B_t(P) are at
/// Euclidean distance, for every P on the sphere. t <= 2rs keeps the ball
/// free of antipodal-branch points; the chord bound 2r*sin(pi/4 - alpha/2)
/// caps every pair's central angle at pi/2 - alpha < pi - 2*alpha. This is a
/// sufficient radius, not the supremum.
inline double locally_euclidean_radius(const SpherePose& pose, const ShortcutParam& sp) {
    const double a = alpha(sp);
    return pose.radius * std::min(2.0 * sp.s, std::sin(kPi / 4.0 - a / 2.0));
}

} // namespace ballmetric
