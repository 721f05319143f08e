#pragma once
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ballmetric/boundary.hpp"
#include "ballmetric/estimate.hpp"

namespace ballmetric {

/// Outcome of one verification suite. pass <=> violations == 0.
struct VerificationReport {
    std::string suite;
    long cases{0};
    long violations{0};
    double worst{0.0};      // worst violation magnitude seen
    std::string worst_case; // reproduction hint for the worst case
    uint64_t seed{0};
    double tol{0.0};
    bool pass() const { return violations == 0; }
};

namespace detail {

struct ViolationTracker {
    VerificationReport report;

    explicit ViolationTracker(std::string name, uint64_t seed, double tol) {
        report.suite = std::move(name);
        report.seed = seed;
        report.tol = tol;
    }

    void check(bool ok, double magnitude, const char* fmt, double a = 0, double b = 0, double c = 0) {
        ++report.cases;
        if (ok) return;
        ++report.violations;
        if (magnitude > report.worst) {
            report.worst = magnitude;
            char buf[160];
            std::snprintf(buf, sizeof buf, fmt, a, b, c);
            report.worst_case = buf;
        }
    }
};

inline const std::vector<double>& grid_radii() {
    static const std::vector<double> r{0.25, 0.5, 1.0};
    return r;
}
inline const std::vector<double>& grid_scales() {
    static const std::vector<double> s{0.1, 0.5, 0.9, 1.0};
    return s;
}

/// Pair sampler biased to exercise both branches: half uniform, half in a
/// cap around the antipode.
inline Vec3 paired_point(const SpherePose& sphere, const Vec3& p, SplitMix64& g) {
    if (g.next_double() < 0.5) return random_on_sphere(sphere, g);
    const Vec3 anti = sphere.center * 2.0 - p;
    return random_in_cap(sphere, anti, g.uniform(0.0, 0.8) * sphere.radius, g);
}

/// Functions with a <= 1 exercised by the reduction-based suites.
inline std::vector<BoundaryFunction> unit_bound_catalog() {
    std::vector<BoundaryFunction> fs;
    fs.push_back(BoundaryFunction::constant(0.0));
    fs.push_back(BoundaryFunction::constant(0.5));
    fs.push_back(BoundaryFunction::spike({0, 0, 1}, 1.0, 0.05));
    fs.push_back(BoundaryFunction::spike(normalized(Vec3{1, 1, 0}), 0.8, 0.2));
    fs.push_back(BoundaryFunction::dense_indicator_prefix(1000));
    {
        auto pts = sample_sphere(SpherePose({0, 0, 0}, 1.0), 6, 99);
        std::vector<double> vals{0.9, 0.2, 0.7, 0.0, 1.0, 0.4};
        fs.push_back(BoundaryFunction::table_lookup(pts, vals));
    }
    return fs;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Pseudo-metric axioms of d^s on the (r, s) grid: zero self-distance,
/// symmetry to 1e-12, triangle inequality to tol (default 1e-9). Equality
/// cases are real: the antipodal detour exactly matches the chord at the
/// branch threshold.
inline VerificationReport run_sphere_axioms(long samples_per_cell, uint64_t seed, double tol) {
    detail::ViolationTracker t("sphere-axioms", seed, tol);
    for (double r : detail::grid_radii()) {
        for (double s : detail::grid_scales()) {
            const SpherePose sphere({0, 0, 0}, r);
            const ShortcutParam sp(s);
            SplitMix64 g(mix_seed(seed, detail::bits_of(r) ^ detail::bits_of(s)));
            for (long i = 0; i < samples_per_cell; ++i) {
                const Vec3 p = random_on_sphere(sphere, g);
                const Vec3 q = detail::paired_point(sphere, p, g);
                const Vec3 w = detail::paired_point(sphere, q, g);
                const double dpp = shortcut_distance(sphere, sp, p, p).value;
                t.check(dpp == 0.0, std::fabs(dpp), "d(p,p)=%g at r=%g s=%g", dpp, r, s);
                const double dpq = shortcut_distance(sphere, sp, p, q).value;
                const double dqp = shortcut_distance(sphere, sp, q, p).value;
                t.check(std::fabs(dpq - dqp) <= 1e-12, std::fabs(dpq - dqp),
                        "symmetry gap %g at r=%g s=%g", std::fabs(dpq - dqp), r, s);
                const double dqw = shortcut_distance(sphere, sp, q, w).value;
                const double dpw = shortcut_distance(sphere, sp, p, w).value;
                const double slack = dpq + dqw - dpw;
                t.check(slack >= -tol, -slack, "triangle gap %g at r=%g s=%g", -slack, r, s);
            }
        }
    }
    return t.report;
}

/// Chord bounds: s*d_E <= d^s <= d_E on sampled pairs (tol default 1e-12).
inline VerificationReport run_eq1_bounds(long samples_per_cell, uint64_t seed, double tol) {
    detail::ViolationTracker t("eq1-bounds", seed, tol);
    for (double r : detail::grid_radii()) {
        for (double s : detail::grid_scales()) {
            const SpherePose sphere({0, 0, 0}, r);
            const ShortcutParam sp(s);
            SplitMix64 g(mix_seed(seed, 17 + detail::bits_of(r) ^ detail::bits_of(s)));
            for (long i = 0; i < samples_per_cell; ++i) {
                const Vec3 p = random_on_sphere(sphere, g);
                const Vec3 q = detail::paired_point(sphere, p, g);
                const double de = euclid(p, q);
                const double v = shortcut_distance(sphere, sp, p, q).value;
                t.check(v >= s * de - tol && v <= de + tol,
                        std::fmax(s * de - v, v - de),
                        "eq1 gap %g at r=%g s=%g", std::fmax(s * de - v, v - de), r, s);
            }
        }
    }
    return t.report;
}

/// Antipode transfer: every Shortcut-branch pair (P,Q) has
/// d^s(-P,Q) = d_E(-P,Q).
inline VerificationReport run_antipode_euclid(long samples_per_cell, uint64_t seed, double tol) {
    detail::ViolationTracker t("antipode-euclid", seed, tol);
    for (double r : detail::grid_radii()) {
        for (double s : {0.1, 0.5, 0.9}) { // s = 1 has no shortcut branch
            const SpherePose sphere({0, 0, 0}, r);
            const ShortcutParam sp(s);
            SplitMix64 g(mix_seed(seed, 31 + detail::bits_of(r) ^ detail::bits_of(s)));
            long shortcut_hits = 0;
            for (long i = 0; i < samples_per_cell; ++i) {
                const Vec3 p = random_on_sphere(sphere, g);
                const Vec3 q = detail::paired_point(sphere, p, g);
                const auto d = shortcut_distance(sphere, sp, p, q);
                if (d.branch != Branch::Shortcut) continue;
                ++shortcut_hits;
                const Vec3 anti = antipode(sphere, p);
                const auto d2 = shortcut_distance(sphere, sp, anti, q);
                const double gap = std::fabs(d2.value - euclid(anti, q));
                t.check(d2.branch == Branch::Euclid && gap <= tol, gap,
                        "eq2 gap %g at r=%g s=%g", gap, r, s);
            }
            t.check(shortcut_hits > 0, 1.0, "no shortcut pairs sampled at r=%g s=%g", r, s);
        }
    }
    return t.report;
}

/// Isometry invariance: |d^s(T p, T q) - d^s(p, q)| <= tol under random
/// isometries that keep the sphere admissible.
inline VerificationReport run_isometry_invariance(long samples, uint64_t seed, double tol) {
    detail::ViolationTracker t("isometry", seed, tol);
    SplitMix64 g(mix_seed(seed, 47));
    for (long i = 0; i < samples; ++i) {
        const double r = g.uniform(0.05, 0.5);
        const Vec3 c0 = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 1.0 - r);
        const SpherePose sphere(c0, r);
        const ShortcutParam sp(g.uniform(0.05, 1.0));
        const Vec3 p = random_on_sphere(sphere, g);
        const Vec3 q = detail::paired_point(sphere, p, g);
        const Mat3 rot = random_rotation(g);
        const Vec3 target = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 1.0 - r);
        const Isometry iso(rot, target - rot * c0);
        const SpherePose moved = apply_isometry(iso, sphere);
        const double before = shortcut_distance(sphere, sp, p, q).value;
        const double after = shortcut_distance(moved, sp, apply_isometry(iso, p),
                                               apply_isometry(iso, q))
                                 .value;
        t.check(std::fabs(after - before) <= tol, std::fabs(after - before),
                "isometry gap %g (case %g)", std::fabs(after - before), static_cast<double>(i));
    }
    return t.report;
}

/// Locally Euclidean radius: every pair within the d^s-ball of radius t
/// evaluates on the Euclid branch (exhaustive sampled check).
inline VerificationReport run_locally_euclidean(long centers, uint64_t seed, double /*tol*/) {
    detail::ViolationTracker t("locally-euclidean", seed, 0.0);
    const long pairs = 100;
    for (double r : detail::grid_radii()) {
        for (double s : detail::grid_scales()) {
            const SpherePose sphere({0, 0, 0}, r);
            const ShortcutParam sp(s);
            const double ball = locally_euclidean_radius(sphere, sp) * (1.0 - 1e-9);
            SplitMix64 g(mix_seed(seed, 61 + detail::bits_of(r) ^ detail::bits_of(s)));
            for (long i = 0; i < centers; ++i) {
                const Vec3 p = random_on_sphere(sphere, g);
                for (long j = 0; j < pairs; ++j) {
                    // Points of B_t(p): all Euclid-branch, so the d^s-ball is
                    // the chordal cap.
                    const Vec3 a = random_in_cap(sphere, p, ball, g);
                    const Vec3 b = random_in_cap(sphere, p, ball, g);
                    const auto d = shortcut_distance(sphere, sp, a, b);
                    t.check(d.branch == Branch::Euclid, 1.0,
                            "shortcut branch inside B_t at r=%g s=%g", r, s);
                }
            }
        }
    }
    return t.report;
}

namespace detail {

/// Random valid chain over a fresh explicit family; roughly half the hops
/// are steered near the antipode so the Shortcut branch is exercised.
inline std::pair<SphereFamily, Chain> random_chain(SplitMix64& g, int max_hops = 5) {
    const int hops = 1 + static_cast<int>(g.next_u64() % static_cast<uint64_t>(max_hops));
    std::vector<ScaledSphere> spheres;
    Chain chain;
    Vec3 anchor = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.4);
    for (int i = 0; i < hops; ++i) {
        double margin = 1.0 - norm(anchor);
        double r = g.uniform(0.02, std::fmax(0.04, margin / 2.5));
        Vec3 center;
        for (int tries = 0;; ++tries) {
            center = anchor + random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * r;
            if (r <= 1.0 - norm(center)) break;
            if (tries > 20) r *= 0.5;
        }
        const SpherePose pose(center, r);
        const ScaledSphere sphere(pose, g.uniform(0.1, 1.0));
        if (i == 0) chain.points.push_back(anchor);
        Vec3 next = (g.next_double() < 0.5)
                        ? random_in_cap(pose, antipode(pose, chain.points.back()),
                                        g.uniform(0.0, 0.3) * r, g)
                        : random_on_sphere(pose, g);
        chain.points.push_back(next);
        chain.spheres.push_back(sphere);
        spheres.push_back(sphere);
        anchor = next;
    }
    return {SphereFamily::explicit_finite(std::move(spheres)), std::move(chain)};
}

} // namespace detail

/// Antipodal normalization preserves endpoints and cost and leaves every
/// hop antipodal or Euclidean.
inline VerificationReport run_normalize_cost(long chains, uint64_t seed, double tol) {
    detail::ViolationTracker t("normalize-cost", seed, tol);
    SplitMix64 g(mix_seed(seed, 71));
    for (long i = 0; i < chains; ++i) {
        auto [family, chain] = detail::random_chain(g);
        const double before = chain_cost(family, chain);
        const Chain norm_chain = normalize_to_antipodal(family, chain);
        const double after = chain_cost(family, norm_chain);
        const double gap = std::fabs(after - before);
        t.check(gap <= tol, gap, "cost gap %g (case %g)", gap, static_cast<double>(i));
        t.check(is_antipodal_or_euclid(norm_chain), 1.0, "antipodal-or-euclid predicate failed (case %g)",
                static_cast<double>(i));
        t.check(euclid(norm_chain.points.front(), chain.points.front()) == 0.0 &&
                    euclid(norm_chain.points.back(), chain.points.back()) == 0.0,
                1.0, "endpoints moved (case %g)", static_cast<double>(i));
    }
    return t.report;
}

/// Cover sandwich: s0*d_E <= upper <= d_E for segment covers, tight at
/// s0 = 1.
inline VerificationReport run_sandwich(long pairs, uint64_t seed, double tol) {
    detail::ViolationTracker t("sandwich", seed, tol);
    for (double s0 : {0.5, 1.0}) {
        const SphereFamily family = SphereFamily::segment_cover(0.25, s0);
        SplitMix64 g(mix_seed(seed, 83 + detail::bits_of(s0)));
        DiscretizationConfig cfg{32, 4, seed};
        for (long i = 0; i < pairs; ++i) {
            const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.95);
            const Vec3 q = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.95);
            if (euclid(p, q) <= 1e-6) continue;
            const double de = euclid(p, q);
            const auto est = estimate_distance(family, p, q, cfg);
            t.check(est.upper >= s0 * de - tol, s0 * de - est.upper, "upper under s0*dE by %g",
                    s0 * de - est.upper);
            t.check(est.upper <= de + tol, est.upper - de, "upper above dE by %g", est.upper - de);
            t.check(est.lower <= est.upper + 1e-12, est.lower - est.upper, "bracket inverted %g",
                    est.lower - est.upper);
            if (s0 == 1.0)
                t.check(std::fabs(est.upper - de) <= tol, std::fabs(est.upper - de),
                        "s0=1 gap %g", std::fabs(est.upper - de));
        }
    }
    return t.report;
}

/// Half-distance law: under the boundary construction, pairs closer than
/// 1/2 see no shortcut (the estimate matches d_E), and no estimate ever
/// lands below min(d_E, 1/2).
inline VerificationReport run_half_distance(long pairs, uint64_t seed, double tol,
                                            int nodes_per_sphere = 1600) {
    detail::ViolationTracker t("half-distance", seed, tol);
    std::vector<BoundaryFunction> fs;
    fs.push_back(BoundaryFunction::spike({0, 0, 1}, 1.0, 0.1));
    fs.push_back(BoundaryFunction::constant(0.5));
    const DiscretizationConfig cfg{nodes_per_sphere, 8, seed};
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        const SphereFamily family = SphereFamily::boundary_shortcut(fs[fi]);
        SplitMix64 g(mix_seed(seed, 97 + fi));
        const long per_f = (pairs + static_cast<long>(fs.size()) - 1) / static_cast<long>(fs.size());
        for (long i = 0; i < per_f; ++i) {
            // Mix interior and near-boundary pairs, all with d_E < 1/2.
            const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) *
                           std::sqrt(g.uniform(0.0, 1.0));
            Vec3 q;
            do {
                const Vec3 dir = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g);
                q = p + dir * g.uniform(0.02, 0.49);
            } while (norm(q) > 1.0);
            const double de = euclid(p, q);
            const auto est = estimate_distance(family, p, q, cfg);
            t.check(std::fabs(est.upper - de) <= tol, std::fabs(est.upper - de),
                    "short-pair gap %g (dE=%g)", std::fabs(est.upper - de), de);
            t.check(est.upper >= de - 1e-9, de - est.upper, "search beat dE by %g",
                    de - est.upper);
        }
        // Long pairs: any estimate strictly below 1/2 would have to equal
        // d_E, so nothing may land under min(d_E, 1/2).
        for (long i = 0; i < 10; ++i) {
            const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 1.0);
            Vec3 q = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 1.0);
            if (euclid(p, q) < 0.5) q = q * -1.0;
            if (euclid(p, q) < 0.5) continue;
            const auto est = estimate_distance(family, p, q, cfg);
            const double floor_value = std::fmin(0.5, euclid(p, q));
            t.check(est.upper >= floor_value - 1e-9, floor_value - est.upper,
                    "estimate under the half-distance floor by %g", floor_value - est.upper);
        }
    }
    return t.report;
}

/// Single-hop bound (o_to_x <= (1 + f(x))/2) plus the boundary reduction
/// cross-checked against the transfer-graph estimator.
inline VerificationReport run_boundary_reduction(long xs_per_f, uint64_t seed, double tol) {
    detail::ViolationTracker t("boundary-reduction", seed, tol);
    const Vec3 origin{0, 0, 0};
    const DiscretizationConfig cfg{128, 8, seed};
    auto catalog = detail::unit_bound_catalog();
    for (size_t fi = 0; fi < catalog.size(); ++fi) {
        const BoundaryFunction& f = catalog[fi];
        const SphereFamily family = SphereFamily::boundary_shortcut(f);
        SplitMix64 g(mix_seed(seed, 103 + fi));
        // the function's own distinguished points first: that is where the
        // reduction actually deviates from the single-hop value
        std::vector<Vec3> xs = f.distinguished_points();
        if (xs.size() > 4) xs.resize(4);
        for (long i = 0; i < xs_per_f; ++i) xs.push_back(random_on_sphere(SpherePose(origin, 1.0), g));
        for (size_t i = 0; i < xs.size(); ++i) {
            const Vec3& x = xs[i];
            const auto cands = boundary_candidates(x, 10000, mix_seed(seed, 1000 + i));
            const auto red = o_to_x_distance(f, x, cands);
            const double single_hop = (1.0 + f.evaluate(x)) / 2.0;
            t.check(red.value <= single_hop + 1e-12, red.value - single_hop,
                    "eq(b) violated by %g", red.value - single_hop);
            t.check(red.value >= 0.5 - 1e-12 && red.value <= 1.0 + 1e-12, 1.0,
                    "range violated: %g", red.value);
            const auto est = estimate_distance(family, origin, x, cfg);
            const double gap = std::fabs(red.value - est.upper);
            t.check(gap <= tol, gap, "reduction vs estimator gap %g", gap);
        }
    }
    return t.report;
}

/// Gap-witness soundness: every strict gap yields a verified positive-margin
/// witness for raw f; zero unverifiable gaps.
inline VerificationReport run_gap_witness(long xs_per_f, uint64_t seed, double /*tol*/) {
    detail::ViolationTracker t("gap-witness", seed, 1e-9);
    auto catalog = detail::unit_bound_catalog();
    catalog.push_back(BoundaryFunction::distance_to({0, 0, 1})); // a = 2: rescaled internally
    for (size_t fi = 0; fi < catalog.size(); ++fi) {
        const BoundaryFunction& f = catalog[fi];
        SplitMix64 g(mix_seed(seed, 113 + fi));
        long gaps = 0;
        for (long i = 0; i < xs_per_f; ++i) {
            const Vec3 x = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g);
            const auto cands = boundary_candidates(x, 4000, mix_seed(seed, 2000 + i));
            std::optional<WitnessRecord> w;
            bool sound = true;
            try {
                w = prop_nlf_check(f, x, cands);
            } catch (const std::logic_error&) {
                sound = false;
            }
            t.check(sound, 1.0, "unverifiable gap (f #%g case %g)", static_cast<double>(fi),
                    static_cast<double>(i));
            if (w) {
                ++gaps;
                const double margin = f.evaluate(w->x) - f.evaluate(w->y) - 2.0 * euclid(w->x, w->y);
                t.check(margin > 0.0, -margin, "stale witness margin %g", margin);
            }
        }
        // Spikes must actually produce gaps somewhere near the spike.
        if (f.kind() == BoundaryFunction::Kind::Spike) {
            const Vec3 x0 = f.distinguished_points().front();
            const auto cands = boundary_candidates(x0, 4000, mix_seed(seed, 3000 + fi));
            auto w = prop_nlf_check(f, x0, cands);
            t.check(w.has_value() && w->margin > 0.0, 1.0, "spike x0 produced no witness (f #%g)",
                    static_cast<double>(fi));
        }
    }
    return t.report;
}

/// Canonical NM sets: NM^1 of the distance function is empty on S^2 and on
/// a great circle; the dense-indicator prefix is exactly the witness set.
inline VerificationReport run_nm_examples(uint64_t seed, long sphere_samples = 10000) {
    detail::ViolationTracker t("nm-examples", seed, 0.0);
    const SpherePose unit({0, 0, 0}, 1.0);

    const auto h = BoundaryFunction::distance_to({0, 0, 1});
    const auto scan = nm_scan(h, 1, static_cast<int>(sphere_samples), seed);
    t.check(scan.hit_count == 0, static_cast<double>(scan.hit_count),
            "NM^1 of distance-to on S^2 nonempty: %g hits", static_cast<double>(scan.hit_count));

    // distance-to restricted to a great circle: still no witnesses
    std::vector<Vec3> circle;
    for (int k = 0; k < 2000; ++k) {
        const double a = 2.0 * kPi * k / 2000.0;
        circle.push_back({std::cos(a), std::sin(a), 0.0});
    }
    const auto gfun = BoundaryFunction::distance_to({1, 0, 0});
    long circle_hits = 0;
    for (size_t k = 0; k < circle.size(); k += 7)
        if (nm_membership(gfun, 1, circle[k], circle)) ++circle_hits;
    t.check(circle_hits == 0, static_cast<double>(circle_hits),
            "NM^1 of g on S^1 nonempty: %g hits", static_cast<double>(circle_hits));

    const int prefix = 1000;
    const auto dense = BoundaryFunction::dense_indicator_prefix(prefix);
    for (int n : {1, 2, 3}) {
        const auto ds = nm_scan(dense, n, 1000, seed);
        for (size_t i = 0; i < ds.samples.size(); ++i) {
            const bool in_prefix = i < static_cast<size_t>(prefix);
            const bool hit = ds.hits_by_sample[i].has_value();
            t.check(hit == in_prefix, 1.0, "dense indicator witness mismatch at n=%g sample %g",
                    static_cast<double>(n), static_cast<double>(i));
        }
    }
    return t.report;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct SuiteSpec {
    std::string name;
    long default_samples;
    double default_tol;
    std::function<VerificationReport(long, uint64_t, double)> run;
};

inline const std::vector<SuiteSpec>& verification_suites() {
    static const std::vector<SuiteSpec> suites = {
        {"sphere-axioms", 100000, 1e-9,
         [](long n, uint64_t s, double t) { return run_sphere_axioms(n, s, t); }},
        {"eq1-bounds", 100000, 1e-12,
         [](long n, uint64_t s, double t) { return run_eq1_bounds(n, s, t); }},
        {"antipode-euclid", 100000, 1e-12,
         [](long n, uint64_t s, double t) { return run_antipode_euclid(n, s, t); }},
        {"isometry", 10000, 1e-9,
         [](long n, uint64_t s, double t) { return run_isometry_invariance(n, s, t); }},
        {"locally-euclidean", 1000, 0.0,
         [](long n, uint64_t s, double t) { return run_locally_euclidean(n, s, t); }},
        {"normalize-cost", 1000, 1e-12,
         [](long n, uint64_t s, double t) { return run_normalize_cost(n, s, t); }},
        {"sandwich", 1000, 1e-9,
         [](long n, uint64_t s, double t) { return run_sandwich(n, s, t); }},
        {"half-distance", 100, 5e-3,
         [](long n, uint64_t s, double t) { return run_half_distance(n, s, t); }},
        {"boundary-reduction", 100, 2e-2,
         [](long n, uint64_t s, double t) { return run_boundary_reduction(n, s, t); }},
        {"gap-witness", 1000, 0.0,
         [](long n, uint64_t s, double t) { return run_gap_witness(n, s, t); }},
        {"nm-examples", 10000, 0.0,
         [](long n, uint64_t s, double) { return run_nm_examples(s, n); }},
    };
    return suites;
}

/// Run a registered suite; samples <= 0 and tol < 0 pick the defaults.
inline std::optional<VerificationReport> run_suite(const std::string& name, long samples,
                                                   uint64_t seed, double tol) {
    for (const auto& s : verification_suites()) {
        if (s.name != name) continue;
        return s.run(samples > 0 ? samples : s.default_samples, seed,
                     tol >= 0.0 ? tol : s.default_tol);
    }
    return std::nullopt;
}

} // namespace ballmetric
