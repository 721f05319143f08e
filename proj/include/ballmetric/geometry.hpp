#pragma once
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ballmetric/errors.hpp"
#include "ballmetric/rng.hpp"
#include "ballmetric/vec3.hpp"

namespace ballmetric {

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute tolerance for |dist(p, center) - radius| when deciding sphere
/// membership. Well above double noise, far below any geometric feature.
inline constexpr double kOnSphereTol = 1e-9;

/// Slack allowed on admissibility and algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

inline double euclid(const Vec3& p, const Vec3& q) { return norm(p - q); }

/// A sphere admissible inside the closed unit ball: radius <= 1 - |center|.
struct SpherePose {
    Vec3 center;
    double radius{0.0};

    SpherePose(const Vec3& c, double r) : center(c), radius(r) {
        if (!(r > 0.0) || r > 1.0 - norm(c) + kAlgebraTol)
            throw std::invalid_argument("SpherePose: sphere not admissible in the unit ball");
    }
};

inline bool on_sphere(const SpherePose& s, const Vec3& p, double tol = kOnSphereTol) {
    return std::fabs(euclid(p, s.center) - s.radius) <= tol;
}

inline void require_on_sphere(const SpherePose& s, const Vec3& p, const char* who) {
    if (!on_sphere(s, p))
        throw OffSphereError(std::string(who) + ": point not on sphere within tolerance");
}

/// Angle at the sphere's center between p and q, in [0, pi].
inline double central_angle(const SpherePose& s, const Vec3& p, const Vec3& q) {
    require_on_sphere(s, p, "central_angle");
    require_on_sphere(s, q, "central_angle");
    const Vec3 u = p - s.center;
    const Vec3 v = q - s.center;
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

/// The point diametrically opposite p: 2*center - p.
inline Vec3 antipode(const SpherePose& s, const Vec3& p) {
    require_on_sphere(s, p, "antipode");
    return s.center * 2.0 - p;
}

/// Deterministic quasi-uniform points on a sphere.
///
/// Golden-ratio Kronecker sequence in z paired with a sqrt(2) sequence in
/// azimuth, phase-shifted per seed. Emitted as a sequence: the first n
/// points of a longer run are exactly the first n points of a shorter one.
inline std::vector<Vec3> sample_sphere(const SpherePose& s, int count, uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_sphere: count must be >= 1");
    constexpr double kGold = 0.6180339887498948482;  // frac((1+sqrt 5)/2)
    constexpr double kSqrt2 = 0.4142135623730950488; // frac(sqrt 2)
    SplitMix64 g(seed ^ 0xC2B2AE3D27D4EB4Full);
    const double off_z = g.next_double();
    const double off_phi = g.next_double();
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double uz = std::fmod(k * kGold + off_z, 1.0);
        const double uphi = std::fmod(k * kSqrt2 + off_phi, 1.0);
        const double z = 1.0 - 2.0 * uz;
        const double ring = std::sqrt(std::fmax(0.0, 1.0 - z * z));
        const double phi = 2.0 * kPi * uphi;
        out.push_back(s.center + Vec3{ring * std::cos(phi), ring * std::sin(phi), z} * s.radius);
    }
    return out;
}

/// Uniform random point on a sphere (for tests and verification suites).
inline Vec3 random_on_sphere(const SpherePose& s, SplitMix64& g) {
    const double z = g.uniform(-1.0, 1.0);
    const double phi = g.uniform(0.0, 2.0 * kPi);
    const double ring = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return s.center + Vec3{ring * std::cos(phi), ring * std::sin(phi), z} * s.radius;
}

/// Uniform random point inside a cap of chordal radius `chord` around p.
inline Vec3 random_in_cap(const SpherePose& s, const Vec3& p, double chord, SplitMix64& g) {
    // z measured along the axis through p; cap: z in [1 - chord^2/(2r^2), 1].
    const double zmin = 1.0 - (chord * chord) / (2.0 * s.radius * s.radius);
    const double z = g.uniform(zmin, 1.0);
    const double phi = g.uniform(0.0, 2.0 * kPi);
    const double ring = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const Vec3 axis = normalized(p - s.center);
    const Vec3 e1 = any_perpendicular(axis);
    const Vec3 e2 = cross(axis, e1);
    const Vec3 dir = axis * z + (e1 * std::cos(phi) + e2 * std::sin(phi)) * ring;
    return s.center + dir * s.radius;
}

// --------------------------------------------------------------------------
// Isometries
// --------------------------------------------------------------------------

struct Mat3 {
    // row-major
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
};

inline double orthogonality_defect(const Mat3& r) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot_ij = 0.0;
            for (int k = 0; k < 3; ++k) dot_ij += r.m[k * 3 + i] * r.m[k * 3 + j];
            worst = std::fmax(worst, std::fabs(dot_ij - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

struct Isometry {
    Mat3 rotation;
    Vec3 translation;

    Isometry() = default;
    Isometry(const Mat3& r, const Vec3& t) : rotation(r), translation(t) {
        if (orthogonality_defect(r) > kAlgebraTol)
            throw std::invalid_argument("Isometry: rotation matrix not orthogonal to 1e-12");
    }
};

inline Vec3 apply_isometry(const Isometry& t, const Vec3& p) {
    return t.rotation * p + t.translation;
}

/// Transformed pose (same radius; admissibility is the caller's concern).
inline SpherePose apply_isometry(const Isometry& t, const SpherePose& s) {
    return SpherePose(apply_isometry(t, s.center), s.radius);
}

inline Mat3 rotation_about_axis(const Vec3& axis_raw, double angle) {
    const Vec3 a = normalized(axis_raw);
    const double c = std::cos(angle), s = std::sin(angle), ic = 1.0 - c;
    Mat3 r;
    r.m = {c + a.x * a.x * ic,       a.x * a.y * ic - a.z * s, a.x * a.z * ic + a.y * s,
           a.y * a.x * ic + a.z * s, c + a.y * a.y * ic,       a.y * a.z * ic - a.x * s,
           a.z * a.x * ic - a.y * s, a.z * a.y * ic + a.x * s, c + a.z * a.z * ic};
    return r;
}

inline Mat3 random_rotation(SplitMix64& g) {
    // Uniform axis, uniform angle; orthogonal by construction.
    const double z = g.uniform(-1.0, 1.0);
    const double phi = g.uniform(0.0, 2.0 * kPi);
    const double ring = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const Vec3 axis{ring * std::cos(phi), ring * std::sin(phi), z};
    return rotation_about_axis(axis, g.uniform(0.0, 2.0 * kPi));
}

// --------------------------------------------------------------------------
// Two-sphere intersection
// --------------------------------------------------------------------------

struct Circle3 {
    Vec3 center;
    double radius{0.0};
    Vec3 normal; // unit
};

/// Intersection circle of two spheres. nullopt when disjoint or nested;
/// tangency (internal or external, tolerance 1e-9) comes back as a
/// zero-radius circle at the contact point.
inline std::optional<Circle3> sphere_intersection_circle(const SpherePose& a, const SpherePose& b) {
    const Vec3 axis = b.center - a.center;
    const double d = norm(axis);
    if (d < kAlgebraTol) return std::nullopt; // concentric
    const Vec3 u = axis / d;
    const double outer = a.radius + b.radius;
    const double inner = std::fabs(a.radius - b.radius);
    if (std::fabs(d - outer) <= kOnSphereTol || std::fabs(d - inner) <= kOnSphereTol)
        return Circle3{a.center + u * a.radius, 0.0, u};
    if (d > outer || d < inner) return std::nullopt;
    const double along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
    const double r2 = a.radius * a.radius - along * along;
    if (r2 <= 0.0) return Circle3{a.center + u * along, 0.0, u};
    return Circle3{a.center + u * along, std::sqrt(r2), u};
}

/// Deterministic points on a circle in 3-space (nested sequence, like
/// sample_sphere).
inline std::vector<Vec3> sample_circle(const Circle3& c, int count, uint64_t seed) {
    constexpr double kGold = 0.6180339887498948482;
    SplitMix64 g(seed ^ 0xA0761D6478BD642Full);
    const double off = g.next_double();
    const Vec3 e1 = any_perpendicular(c.normal);
    const Vec3 e2 = cross(c.normal, e1);
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double ang = 2.0 * kPi * std::fmod(k * kGold + off, 1.0);
        out.push_back(c.center + (e1 * std::cos(ang) + e2 * std::sin(ang)) * c.radius);
    }
    return out;
}

} // namespace ballmetric
