#pragma once
#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ballmetric/boundary_function.hpp"
#include "ballmetric/geometry.hpp"

namespace ballmetric {

/// A certified member of NM^n_f: y with f(x) - f(y) > n * d_E(x, y).
struct WitnessRecord {
    Vec3 x;
    Vec3 y;
    double f_x{0.0};
    double f_y{0.0};
    double margin{0.0}; // f(x) - f(y) - n*d_E(x,y), > 0
};

/// Seeded candidate set on S^2 for the minimizations: quasi-uniform samples
/// plus the query point.
inline std::vector<Vec3> boundary_candidates(const Vec3& x, int count, uint64_t seed) {
    const SpherePose unit(Vec3{0, 0, 0}, 1.0);
    std::vector<Vec3> cands = sample_sphere(unit, count, seed);
    cands.push_back(x);
    return cands;
}

struct OToXResult {
    double value{0.0};
    Vec3 best_y;
    /// Minimizer came off the outermost refinement ring; the sampled
    /// minimum may still sit above the true infimum.
    bool refined_edge{false};
};

/// Sampled form of the boundary reduction: d^{Lambda,s}(O, x) equals the
/// infimum over y in S^2 of (1 + f(y))/2 + d_E(y, x) for the fixed
/// half-radius construction driven by f (which needs f <= 1). Returns the
/// minimum over the candidates plus two halving refinement rings around the
/// incumbent; an upper bound converging to the infimum as candidates
/// densify.
inline OToXResult o_to_x_distance(const BoundaryFunction& f, const Vec3& x,
                                  const std::vector<Vec3>& candidates) {
    if (f.bound() > 1.0 + kAlgebraTol)
        throw InvalidFunctionError(
            "o_to_x_distance: needs f <= 1 (rescale first: the reduction uses the "
            "half-radius normalization)");
    if (candidates.empty()) throw std::invalid_argument("o_to_x_distance: no candidates");
    auto value_at = [&](const Vec3& y) { return (1.0 + f.evaluate(y)) / 2.0 + euclid(y, x); };

    Vec3 best = candidates.front();
    double best_val = value_at(best);
    for (const Vec3& y : candidates) {
        const double v = value_at(y);
        if (v < best_val) {
            best_val = v;
            best = y;
        }
    }
    // Two refinement rounds: a 24-point ring around the incumbent, radius
    // halved each round.
    double ring = 4.0 / std::sqrt(static_cast<double>(candidates.size()));
    bool from_last_ring = false;
    for (int round = 0; round < 2; ++round, ring /= 2.0) {
        const Vec3 axis = best;
        const Vec3 e1 = any_perpendicular(axis);
        const Vec3 e2 = cross(axis, e1);
        bool improved = false;
        Vec3 round_best = best;
        double round_val = best_val;
        for (int k = 0; k < 24; ++k) {
            const double ang = 2.0 * kPi * k / 24.0;
            const Vec3 y = normalized(axis + (e1 * std::cos(ang) + e2 * std::sin(ang)) * ring);
            const double v = value_at(y);
            if (v < round_val) {
                round_val = v;
                round_best = y;
                improved = true;
            }
        }
        if (improved) {
            best = round_best;
            best_val = round_val;
        }
        from_last_ring = improved && (round == 1);
    }
    return {best_val, best, from_last_ring};
}

/// Strict-gap witness extraction: whenever the sampled reduction undercuts
/// the direct single-hop value (1 + f(x))/2, its minimizer y certifies
/// f(x) - f(y) > 2 d_E(x, y), i.e. x is an NM^2_f member. Functions with
/// a > 1 are first rescaled to f/n (smallest integer n > a); a witness for
/// the rescaled function is one for f as well, and is re-verified against
/// raw f before being returned.
inline std::optional<WitnessRecord> prop_nlf_check(const BoundaryFunction& f, const Vec3& x,
                                                   const std::vector<Vec3>& candidates) {
    const BoundaryFunction* use = &f;
    BoundaryFunction rescaled = f;
    if (f.bound() > 1.0 + kAlgebraTol) {
        rescaled = f.scaled_down(static_cast<int>(std::floor(f.bound())) + 1);
        use = &rescaled;
    }
    const OToXResult o = o_to_x_distance(*use, x, candidates);
    const double single_hop = (1.0 + use->evaluate(x)) / 2.0;
    if (o.value >= single_hop - 1e-9) return std::nullopt;
    WitnessRecord w;
    w.x = x;
    w.y = o.best_y;
    w.f_x = f.evaluate(x);
    w.f_y = f.evaluate(o.best_y);
    w.margin = w.f_x - w.f_y - 2.0 * euclid(x, o.best_y);
    if (!(w.margin > 0.0))
        throw std::logic_error("prop_nlf_check: strict gap without a positive witness margin");
    return w;
}

/// Best NM^n_f witness among the candidates (maximal margin), or nothing if
/// no candidate certifies membership. Sound but incomplete: a miss only
/// means "not found among these candidates".
inline std::optional<WitnessRecord> nm_membership(const BoundaryFunction& f, int n, const Vec3& x,
                                                  const std::vector<Vec3>& candidates) {
    if (n < 1) throw std::invalid_argument("nm_membership: n must be >= 1");
    const double fx = f.evaluate(x);
    std::optional<WitnessRecord> best;
    for (const Vec3& y : candidates) {
        const double fy = f.evaluate(y);
        const double margin = fx - fy - static_cast<double>(n) * euclid(x, y);
        if (margin > 0.0 && (!best || margin > best->margin))
            best = WitnessRecord{x, y, fx, fy, margin};
    }
    return best;
}

struct NmScanResult {
    std::vector<Vec3> samples; // scan order: distinguished points first
    std::vector<std::optional<WitnessRecord>> hits_by_sample;
    std::vector<WitnessRecord> witnesses;
    long hit_count{0};
    double max_margin{0.0};
};

/// Seeded NM^n_f scan with raw f (any bound a): the function's distinguished
/// points plus quasi-uniform samples, each tested against a seeded candidate
/// set.
inline NmScanResult nm_scan(const BoundaryFunction& f, int n, int sample_count, uint64_t seed,
                            int candidate_count = 4000) {
    if (sample_count < 1) throw std::invalid_argument("nm_scan: sample_count must be >= 1");
    const SpherePose unit(Vec3{0, 0, 0}, 1.0);
    NmScanResult result;
    result.samples = f.distinguished_points();
    auto extra = sample_sphere(unit, sample_count, mix_seed(seed, 0x5A));
    result.samples.insert(result.samples.end(), extra.begin(), extra.end());
    const auto candidates = sample_sphere(unit, candidate_count, mix_seed(seed, 0xCA));
    for (const Vec3& x : result.samples) {
        auto hit = nm_membership(f, n, x, candidates);
        result.hits_by_sample.push_back(hit);
        if (hit) {
            result.witnesses.push_back(*hit);
            ++result.hit_count;
            result.max_margin = std::fmax(result.max_margin, hit->margin);
        }
    }
    return result;
}

} // namespace ballmetric
