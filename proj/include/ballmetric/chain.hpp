#pragma once
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "ballmetric/boundary_function.hpp"
#include "ballmetric/errors.hpp"
#include "ballmetric/geometry.hpp"
#include "ballmetric/shortcut_metric.hpp"

namespace ballmetric {

struct ScaledSphere {
    SpherePose pose;
    double scale{1.0};

    ScaledSphere(const SpherePose& p, double s) : pose(p), scale(s) {
        if (!(s > 0.0) || s > 1.0)
            throw InvalidScaleError("ScaledSphere: scale must lie in (0, 1]");
    }
};

/// A family of scaled spheres the chain infimum ranges over. Parametric
/// variants are membership predicates (the cover sets are uncountable);
/// only ExplicitFinite supports exhaustive graph search.
class SphereFamily {
public:
    struct ExplicitFinite {
        std::vector<ScaledSphere> spheres;
    };
    /// All admissible spheres of radius <= t, uniform scale s0.
    struct SegmentCover {
        double t;
        double s0;
    };
    /// All admissible spheres of radius <= 1/2; the sphere internally
    /// tangent to S^2 at x carries scale (1 + f(x))/2, every other one 1.
    struct BoundaryShortcut {
        BoundaryFunction f;
    };

    static SphereFamily explicit_finite(std::vector<ScaledSphere> spheres) {
        if (spheres.empty())
            throw std::invalid_argument("SphereFamily: explicit family must be nonempty");
        return SphereFamily(ExplicitFinite{std::move(spheres)});
    }

    static SphereFamily segment_cover(double t, double s0) {
        if (!(t > 0.0) || t > 1.0)
            throw std::invalid_argument("SphereFamily: cover radius t must lie in (0, 1]");
        if (!(s0 > 0.0) || s0 > 1.0)
            throw InvalidScaleError("SphereFamily: s0 must lie in (0, 1]");
        return SphereFamily(SegmentCover{t, s0});
    }

    static SphereFamily boundary_shortcut(BoundaryFunction f) {
        if (f.bound() > 1.0 + kAlgebraTol)
            throw InvalidFunctionError(
                "SphereFamily: boundary construction needs f <= 1 (scale must stay in (0,1])");
        return SphereFamily(BoundaryShortcut{std::move(f)});
    }

    bool is_explicit() const { return std::holds_alternative<ExplicitFinite>(v_); }

    const std::vector<ScaledSphere>& members() const {
        if (!is_explicit())
            throw std::logic_error("SphereFamily: members() only for explicit families");
        return std::get<ExplicitFinite>(v_).spheres;
    }

    /// Declared lower bound on all scales in the family.
    double s0() const {
        if (const auto* e = std::get_if<ExplicitFinite>(&v_)) {
            double m = 1.0;
            for (const auto& s : e->spheres) m = std::fmin(m, s.scale);
            return m;
        }
        if (const auto* c = std::get_if<SegmentCover>(&v_)) return c->s0;
        return 0.5;
    }

    /// Max member radius for parametric covers (0 when not applicable).
    double cover_radius() const {
        if (const auto* c = std::get_if<SegmentCover>(&v_)) return c->t;
        if (std::holds_alternative<BoundaryShortcut>(v_)) return 0.5;
        return 0.0;
    }

    const BoundaryFunction* boundary_function() const {
        if (const auto* b = std::get_if<BoundaryShortcut>(&v_)) return &b->f;
        return nullptr;
    }

    /// Scale assignment s(lambda). Throws NotInFamily for non-members.
    double scale_of(const SpherePose& pose) const {
        if (const auto* e = std::get_if<ExplicitFinite>(&v_)) {
            for (const auto& s : e->spheres) {
                if (euclid(s.pose.center, pose.center) <= kOnSphereTol &&
                    std::fabs(s.pose.radius - pose.radius) <= kOnSphereTol)
                    return s.scale;
            }
            throw NotInFamilyError("scale_of: sphere not a member of the explicit family");
        }
        if (const auto* c = std::get_if<SegmentCover>(&v_)) {
            if (pose.radius > c->t + kAlgebraTol)
                throw NotInFamilyError("scale_of: radius exceeds the cover bound t");
            return c->s0;
        }
        const auto& b = std::get<BoundaryShortcut>(v_);
        if (pose.radius > 0.5 + kAlgebraTol)
            throw NotInFamilyError("scale_of: radius exceeds 1/2");
        const Vec3 doubled = pose.center * 2.0;
        if (std::fabs(pose.radius - 0.5) <= kOnSphereTol &&
            std::fabs(norm(doubled) - 1.0) <= kOnSphereTol) {
            // Tangent sphere at x = 2*center. f sees the unnormalized double
            // so exact-match catalogs (dense indicator, tables) stay exact.
            return (1.0 + b.f.evaluate(doubled)) / 2.0;
        }
        return 1.0;
    }

    /// Membership check for a sphere carried by a chain, scale included.
    bool contains(const ScaledSphere& s) const {
        if (const auto* e = std::get_if<ExplicitFinite>(&v_)) {
            for (const auto& m : e->spheres) {
                if (euclid(m.pose.center, s.pose.center) <= kOnSphereTol &&
                    std::fabs(m.pose.radius - s.pose.radius) <= kOnSphereTol &&
                    std::fabs(m.scale - s.scale) <= kAlgebraTol)
                    return true;
            }
            return false;
        }
        try {
            return std::fabs(scale_of(s.pose) - s.scale) <= kAlgebraTol;
        } catch (const NotInFamilyError&) {
            return false;
        }
    }

private:
    template <class V>
    explicit SphereFamily(V v) : v_(std::move(v)) {}

    std::variant<ExplicitFinite, SegmentCover, BoundaryShortcut> v_;
};

/// A chain [X, lambda, n]: points X_0..X_n and hosting spheres
/// lambda_1..lambda_n with X_{i-1}, X_i on sphere lambda_i.
struct Chain {
    std::vector<Vec3> points;
    std::vector<ScaledSphere> spheres;

    size_t hops() const { return spheres.size(); }
};

inline void validate_chain(const SphereFamily& family, const Chain& chain) {
    if (chain.spheres.empty() || chain.points.size() != chain.spheres.size() + 1)
        throw InvalidChainError("chain: need n >= 1 hops and n+1 points");
    for (size_t i = 0; i < chain.spheres.size(); ++i) {
        const ScaledSphere& s = chain.spheres[i];
        if (!on_sphere(s.pose, chain.points[i]) || !on_sphere(s.pose, chain.points[i + 1]))
            throw InvalidChainError("chain: hop endpoints not on their sphere");
        if (!family.contains(s))
            throw InvalidChainError("chain: sphere (or its scale) not in the family");
    }
}

/// Sum of per-hop shortcut distances: the summand of the d^{Lambda,s}
/// infimum.
inline double chain_cost(const SphereFamily& family, const Chain& chain) {
    validate_chain(family, chain);
    double total = 0.0;
    for (size_t i = 0; i < chain.spheres.size(); ++i) {
        const ScaledSphere& s = chain.spheres[i];
        total += shortcut_distance(s.pose, ShortcutParam(s.scale), chain.points[i],
                                   chain.points[i + 1])
                     .value;
    }
    return total;
}

/// True when every hop is (within tolerance) antipodal on its sphere or
/// evaluates on the Euclid branch.
inline bool is_antipodal_or_euclid(const Chain& chain) {
    for (size_t i = 0; i < chain.spheres.size(); ++i) {
        const ScaledSphere& s = chain.spheres[i];
        if (euclid(chain.points[i + 1], antipode(s.pose, chain.points[i])) <= kOnSphereTol)
            continue;
        if (shortcut_distance(s.pose, ShortcutParam(s.scale), chain.points[i],
                              chain.points[i + 1])
                .branch == Branch::Euclid)
            continue;
        return false;
    }
    return true;
}

/// Rewrite every Shortcut-branch hop (X, Y) as the antipodal hop (X, -X)
/// followed by (-X, Y) on the same sphere. Endpoints and cost are preserved
/// exactly: the shortcut value *is* 2rs + d_E(-X, Y), and (-X, Y) lands on
/// the Euclid branch.
inline Chain normalize_to_antipodal(const SphereFamily& family, const Chain& chain) {
    validate_chain(family, chain);
    Chain out;
    out.points.push_back(chain.points.front());
    for (size_t i = 0; i < chain.spheres.size(); ++i) {
        const ScaledSphere& s = chain.spheres[i];
        const Vec3& a = chain.points[i];
        const Vec3& b = chain.points[i + 1];
        const auto sd = shortcut_distance(s.pose, ShortcutParam(s.scale), a, b);
        const Vec3 anti = antipode(s.pose, a);
        if (sd.branch == Branch::Shortcut && euclid(b, anti) > kOnSphereTol) {
            out.points.push_back(anti);
            out.spheres.push_back(s);
        }
        out.points.push_back(b);
        out.spheres.push_back(s);
    }
    return out;
}

namespace detail {

struct SegmentChainBuildFailure {};

inline ScaledSphere tangent_end_sphere(const SphereFamily& family, const Vec3& boundary_pt,
                                       const Vec3& other_pt, double t_max,
                                       bool avoid_half_radius) {
    const double h = euclid(boundary_pt, other_pt);
    const Vec3 u = (boundary_pt - other_pt) / h;
    const double kappa = dot(boundary_pt, u);
    if (!(kappa > 0.0)) throw SegmentChainBuildFailure{};
    const double rho = h / (2.0 * kappa);
    if (rho > t_max + kAlgebraTol) throw SegmentChainBuildFailure{};
    if (avoid_half_radius && std::fabs(rho - 0.5) < 1e-6) throw SegmentChainBuildFailure{};
    const SpherePose pose(boundary_pt * (1.0 - rho), rho);
    return ScaledSphere(pose, family.scale_of(pose));
}

inline ScaledSphere interior_hop_sphere(const SphereFamily& family, const Vec3& a, const Vec3& b,
                                        double t_max) {
    const double h = euclid(a, b);
    const Vec3 mid = (a + b) * 0.5;
    // Midpoint (diameter) sphere when the family assigns it scale 1: the
    // angle-pi tie then takes the Euclid branch and the hop costs d_E.
    if (h / 2.0 <= 1.0 - norm(mid) + kAlgebraTol) {
        const SpherePose pose(mid, h / 2.0);
        const double sc = family.scale_of(pose);
        if (sc == 1.0) return ScaledSphere(pose, sc);
    }
    // Otherwise offset the center off the segment: the central angle drops
    // below pi - 2*alpha for every scale, keeping the hop Euclidean. Large
    // offsets (radius up to the cover bound) host chords that hug the
    // boundary sphere.
    const Vec3 u = (b - a) / h;
    const Vec3 perp = mid - u * dot(mid, u);
    Vec3 inward = (norm(perp) > 1e-12) ? normalized(perp) * -1.0 : any_perpendicular(u);
    for (double w = 0.5 * h; w <= 0.95 * t_max; w *= 2.0) {
        const Vec3 c = mid + inward * w;
        const double r = std::sqrt(h * h / 4.0 + w * w);
        if (r <= t_max + kAlgebraTol && r <= 1.0 - norm(c) + kAlgebraTol) {
            const SpherePose pose(c, r);
            return ScaledSphere(pose, family.scale_of(pose));
        }
    }
    throw SegmentChainBuildFailure{};
}

inline Chain build_segment_chain(const SphereFamily& family, const Vec3& p, const Vec3& q,
                                 double t_max, int n) {
    const bool avoid_half = family.boundary_function() != nullptr;
    const bool p_boundary = norm(p) >= 1.0 - 1e-12;
    const bool q_boundary = norm(q) >= 1.0 - 1e-12;
    Chain chain;
    chain.points.resize(static_cast<size_t>(n) + 1);
    chain.points[0] = p;
    chain.points[static_cast<size_t>(n)] = q;
    const Vec3 step = q - p;
    for (int i = 1; i < n; ++i)
        chain.points[static_cast<size_t>(i)] = p + step * (static_cast<double>(i) / n);
    for (int i = 1; i <= n; ++i) {
        const Vec3& a = chain.points[static_cast<size_t>(i - 1)];
        const Vec3& b = chain.points[static_cast<size_t>(i)];
        if (i == n && q_boundary)
            chain.spheres.push_back(tangent_end_sphere(family, b, a, t_max, avoid_half));
        else if (i == 1 && p_boundary)
            chain.spheres.push_back(tangent_end_sphere(family, a, b, t_max, avoid_half));
        else
            chain.spheres.push_back(interior_hop_sphere(family, a, b, t_max));
    }
    return chain;
}

} // namespace detail

/// A chain along the Euclidean segment from p to q with strictly increasing
/// progress, hosted on family spheres: interior hops ride spheres of scale 1
/// (diameter spheres) or perpendicular-offset spheres, hops touching S^2 use
/// the internally tangent sphere through the boundary point. Cost equals
/// d_E(p, q) whenever every hop evaluates at scale-1 or on the Euclid branch
/// (always for BoundaryShortcut, and for interior pairs of any cover).
inline Chain segment_chain(const SphereFamily& family, const Vec3& p, const Vec3& q) {
    const double t_max = family.cover_radius();
    if (t_max <= 0.0)
        throw NotInFamilyError("segment_chain: family must be a SegmentCover or BoundaryShortcut");
    if (norm(p) > 1.0 + kAlgebraTol || norm(q) > 1.0 + kAlgebraTol)
        throw std::invalid_argument("segment_chain: endpoints must lie in the unit ball");
    const double d = euclid(p, q);
    if (d <= 1e-12) throw DegenerateInputError("segment_chain: p = q (distance is 0, no chain)");

    int n = static_cast<int>(std::ceil(d / t_max)) + 2;
    // Boundary endpoints force tangent spheres of radius h/(2*kappa); keep
    // those inside the cover.
    for (const auto& [end, other] : {std::pair{p, q}, std::pair{q, p}}) {
        if (norm(end) >= 1.0 - 1e-12) {
            const double kappa = dot(end, (end - other) / d);
            if (!(kappa > 0.0))
                throw std::invalid_argument("segment_chain: degenerate boundary geometry");
            n = std::max(n, static_cast<int>(std::ceil(d / (1.8 * t_max * kappa))) + 2);
        }
    }
    while (n <= 2'000'000) {
        try {
            return detail::build_segment_chain(family, p, q, t_max, n);
        } catch (const detail::SegmentChainBuildFailure&) {
            n = n * 2 + 1;
        }
    }
    throw InvalidChainError("segment_chain: could not host the segment on family spheres");
}

} // namespace ballmetric
