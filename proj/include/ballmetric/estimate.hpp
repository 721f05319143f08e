#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "ballmetric/chain.hpp"
#include "ballmetric/transfer_graph.hpp"

namespace ballmetric {

/// Bracket [lower, upper] on d^{Lambda,s}(P,Q) with a witness chain
/// realizing the upper bound. Only the upper bound comes from search; the
/// lower bound is the analytic envelope s0 * d_E.
struct MetricEstimate {
    double upper{0.0};
    double lower{0.0};
    Chain witness;
};

namespace detail {

/// A small admissible sphere through p (for the degenerate p = q witness).
inline ScaledSphere tiny_sphere_through(const SphereFamily& family, const Vec3& p) {
    if (family.is_explicit()) {
        for (const auto& s : family.members())
            if (on_sphere(s.pose, p)) return s;
        throw NotInFamilyError("estimate_distance: query point lies on no member sphere");
    }
    const double t_max = family.cover_radius();
    const double margin = 1.0 - norm(p);
    double r = std::min(0.1, 0.9 * t_max);
    if (margin >= 1e-12) r = std::min(r, margin / 2.5);
    const Vec3 dir = (norm(p) > 1e-9) ? any_perpendicular(p) : Vec3{1, 0, 0};
    const Vec3 center = (margin >= 1e-12) ? p + dir * r : p * (1.0 - r);
    const SpherePose pose(center, r);
    return ScaledSphere(pose, family.scale_of(pose));
}

inline MetricEstimate degenerate_estimate(const SphereFamily& family, const Vec3& p) {
    MetricEstimate est;
    est.upper = 0.0;
    est.lower = 0.0;
    est.witness.points = {p, p};
    est.witness.spheres = {tiny_sphere_through(family, p)};
    return est;
}

inline void push_sphere(std::vector<ScaledSphere>& out, const ScaledSphere& s) {
    for (const auto& e : out) {
        if (euclid(e.pose.center, s.pose.center) <= 1e-12 &&
            std::fabs(e.pose.radius - s.pose.radius) <= 1e-12)
            return;
    }
    out.push_back(s);
}

/// Diameter spheres over each hop of a segment chain; the antipodal hops on
/// these realize the s0*d_E route of a scaled cover. Hops whose diameter
/// sphere would poke out of the ball are skipped.
inline void add_diameter_spheres(const SphereFamily& family, const Chain& seg,
                                 std::vector<ScaledSphere>& out) {
    for (size_t i = 0; i + 1 < seg.points.size(); ++i) {
        const Vec3 mid = (seg.points[i] + seg.points[i + 1]) * 0.5;
        const double r = euclid(seg.points[i], seg.points[i + 1]) / 2.0;
        if (r <= 1e-12 || r > 1.0 - norm(mid) + kAlgebraTol) continue;
        if (r > family.cover_radius() + kAlgebraTol) continue;
        const SpherePose pose(mid, r);
        push_sphere(out, ScaledSphere(pose, family.scale_of(pose)));
    }
}

/// The big tangent sphere (b/2, 1/2) at a boundary point.
inline ScaledSphere boundary_tangent_sphere(const SphereFamily& family, const Vec3& b) {
    const SpherePose pose(b * 0.5, 0.5);
    return ScaledSphere(pose, family.scale_of(pose));
}

struct ReductionCandidate {
    Vec3 y;
    double value;
};

/// Coarse + refined scan of y -> (1 + f(y))/2 + d_E(y, x): the objective of
/// the boundary reduction. Used to pick which tangent spheres the finite
/// sub-family should contain for an origin-to-boundary query.
inline std::vector<ReductionCandidate> scan_reduction_candidates(const BoundaryFunction& f,
                                                                 const Vec3& x, int count,
                                                                 uint64_t seed, int keep) {
    const SpherePose unit(Vec3{0, 0, 0}, 1.0);
    std::vector<Vec3> cands = sample_sphere(unit, count, seed);
    cands.push_back(x);
    auto value_at = [&](const Vec3& y) { return (1.0 + f.evaluate(y)) / 2.0 + euclid(y, x); };
    auto best_of = [&](const std::vector<Vec3>& pts) {
        Vec3 arg = pts.front();
        double best = value_at(arg);
        for (const Vec3& y : pts) {
            const double v = value_at(y);
            if (v < best) {
                best = v;
                arg = y;
            }
        }
        return std::pair{arg, best};
    };
    auto [inc, inc_val] = best_of(cands);
    double ring = 4.0 / std::sqrt(static_cast<double>(count));
    for (int round = 0; round < 3; ++round, ring /= 2.0) {
        std::vector<Vec3> ring_pts;
        const Vec3 axis = inc;
        const Vec3 e1 = any_perpendicular(axis);
        const Vec3 e2 = cross(axis, e1);
        for (int k = 0; k < 24; ++k) {
            const double ang = 2.0 * kPi * k / 24.0;
            Vec3 ypt = normalized(axis + (e1 * std::cos(ang) + e2 * std::sin(ang)) * ring);
            ring_pts.push_back(ypt);
            cands.push_back(ypt);
        }
        auto [arg2, val2] = best_of(ring_pts);
        if (val2 < inc_val) {
            inc = arg2;
            inc_val = val2;
        }
    }
    std::vector<ReductionCandidate> all;
    all.reserve(cands.size());
    for (const Vec3& y : cands) all.push_back({y, value_at(y)});
    std::stable_sort(all.begin(), all.end(),
                     [](const ReductionCandidate& a, const ReductionCandidate& b) {
                         return a.value < b.value;
                     });
    // keep the best few, spaced apart so each contributes a distinct route
    std::vector<ReductionCandidate> out;
    for (const auto& c : all) {
        bool dup = false;
        for (const auto& e : out) dup = dup || euclid(e.y, c.y) <= 2e-3;
        if (!dup) out.push_back(c);
        if (static_cast<int>(out.size()) >= keep) break;
    }
    return out;
}

inline bool near_origin(const Vec3& p) { return norm(p) <= 1e-12; }
inline bool near_boundary(const Vec3& p) { return norm(p) >= 1.0 - 1e-12; }

/// Per-query finite sub-family for a BoundaryShortcut query: the segment
/// cover between the endpoints, the tangent spheres at boundary endpoints,
/// and, for origin-to-boundary queries, tangent spheres at the best
/// reduction candidates plus seeded extras, each wired to x by its own
/// segment cover.
inline std::vector<ScaledSphere> boundary_subfamily(const SphereFamily& family, const Vec3& p,
                                                    const Vec3& q, const DiscretizationConfig& cfg,
                                                    const Chain& seg) {
    std::vector<ScaledSphere> out;
    for (const auto& s : seg.spheres) push_sphere(out, s);
    for (const Vec3& b : {p, q})
        if (near_boundary(b)) push_sphere(out, boundary_tangent_sphere(family, b));

    const BoundaryFunction* f = family.boundary_function();
    const bool o2x = (near_origin(p) && near_boundary(q)) || (near_origin(q) && near_boundary(p));
    if (f && o2x) {
        const Vec3 x = near_boundary(q) ? q : p;
        auto cands = scan_reduction_candidates(*f, x, 8192, mix_seed(cfg.seed, 0xB0DA), 8);
        SplitMix64 g(mix_seed(cfg.seed, 0xEB));
        // a few seeded extras so the search is not confined to the scan's picks
        const SpherePose unit(Vec3{0, 0, 0}, 1.0);
        for (int k = 0; k < 4; ++k) cands.push_back({random_on_sphere(unit, g), 0.0});
        for (const auto& c : cands) {
            push_sphere(out, boundary_tangent_sphere(family, c.y));
            // skip the link for candidates essentially at x: the direct
            // tangent hop already covers them
            if (euclid(c.y, x) > 1e-3) {
                const Chain link = segment_chain(family, c.y, x);
                for (const auto& s : link.spheres) push_sphere(out, s);
            }
        }
    }
    return out;
}

inline MetricEstimate estimate_on_subfamily(const SphereFamily& family,
                                            const std::vector<ScaledSphere>& sub, const Vec3& p,
                                            const Vec3& q, const DiscretizationConfig& cfg,
                                            const std::optional<Chain>& clamp_chain) {
    const std::array<Vec3, 2> terminals{p, q};
    TransferGraph graph = build_transfer_graph(sub, cfg, terminals);
    const auto path = shortest_path(graph, graph.terminals[0], graph.terminals[1], family.s0());

    MetricEstimate est;
    est.lower = family.s0() * euclid(p, q);
    if (!path && !clamp_chain)
        throw NoChainError("estimate_distance: no chain joins the query points in this family");
    if (path) {
        est.upper = path->cost;
        est.witness = path_to_chain(graph, *path);
    }
    if (clamp_chain) {
        const double clamp_cost = chain_cost(family, *clamp_chain);
        if (!path || clamp_cost < est.upper) {
            est.upper = clamp_cost;
            est.witness = *clamp_chain;
        }
    }
    return est;
}

} // namespace detail

/// Bracket d^{Lambda,s}(P,Q): shortest-path upper bound over the discretized
/// sub-family (every graph path is a valid chain), clamped for piecewise
/// dense covers by the segment chain whose cost is d_E, plus the analytic
/// lower bound s0 * d_E.
inline MetricEstimate estimate_distance(const SphereFamily& family, const Vec3& p, const Vec3& q,
                                        const DiscretizationConfig& cfg) {
    cfg.validate();
    if (euclid(p, q) <= 1e-12) return detail::degenerate_estimate(family, p);

    if (family.is_explicit())
        return detail::estimate_on_subfamily(family, family.members(), p, q, cfg, std::nullopt);

    const Chain seg = segment_chain(family, p, q);
    std::vector<ScaledSphere> sub;
    if (family.boundary_function()) {
        sub = detail::boundary_subfamily(family, p, q, cfg, seg);
    } else {
        for (const auto& s : seg.spheres) detail::push_sphere(sub, s);
        if (family.s0() < 1.0) detail::add_diameter_spheres(family, seg, sub);
    }
    return detail::estimate_on_subfamily(family, sub, p, q, cfg, seg);
}

struct ConvergenceRow {
    int nodes_per_sphere{0};
    double upper{0.0};
};

/// Upper bounds under nested refinements; with a shared seed the node sets
/// are supersets, so the column never increases.
inline std::vector<ConvergenceRow> convergence_study(const SphereFamily& family, const Vec3& p,
                                                     const Vec3& q,
                                                     const std::vector<DiscretizationConfig>& cfgs) {
    if (cfgs.empty()) return {};
    for (size_t i = 1; i < cfgs.size(); ++i) {
        if (cfgs[i].seed != cfgs[0].seed)
            throw std::invalid_argument("convergence_study: configs must share a seed");
        if (cfgs[i].nodes_per_sphere < cfgs[i - 1].nodes_per_sphere ||
            cfgs[i].intersection_nodes < cfgs[i - 1].intersection_nodes)
            throw std::invalid_argument("convergence_study: configs must be nested refinements");
    }
    std::vector<ConvergenceRow> rows;
    rows.reserve(cfgs.size());
    for (const auto& cfg : cfgs)
        rows.push_back({cfg.nodes_per_sphere, estimate_distance(family, p, q, cfg).upper});
    return rows;
}

} // namespace ballmetric
