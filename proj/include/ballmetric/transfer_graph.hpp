#pragma once
#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "ballmetric/chain.hpp"
#include "ballmetric/geometry.hpp"
#include "ballmetric/shortcut_metric.hpp"

namespace ballmetric {

/// Node budget for the discretized chain space. Configs with the same seed
/// and a larger nodes_per_sphere produce a per-sphere node superset (the
/// samplers are prefix-nested sequences); refinement never increases
/// shortest-path costs.
struct DiscretizationConfig {
    int nodes_per_sphere{64};
    int intersection_nodes{8};
    uint64_t seed{0};

    void validate() const {
        if (nodes_per_sphere < 4)
            throw std::invalid_argument("DiscretizationConfig: nodes_per_sphere must be >= 4");
        if (intersection_nodes < 0)
            throw std::invalid_argument("DiscretizationConfig: intersection_nodes must be >= 0");
    }
};

/// Weighted graph over sampled sphere points. Two nodes are joined when they
/// share a sphere; the effective weight is the minimum of d^{s} over shared
/// spheres (realized implicitly by relaxing once per hosting sphere).
/// Adjacency stays implicit (per-sphere cliques) so big spheres don't
/// materialize n^2 edges.
struct TransferGraph {
    std::vector<ScaledSphere> spheres;
    std::vector<Vec3> nodes;
    std::vector<std::vector<int>> sphere_nodes; // per sphere
    std::vector<std::vector<int>> node_spheres; // per node
    std::vector<int> terminals;                 // node ids, one per input terminal

    // cached per sphere: cos/params for fast hop costs
    std::vector<double> sphere_threshold; // pi - 2*alpha(scale)

    size_t node_count() const { return nodes.size(); }
};

namespace detail {

/// Sampling stream tied to the sphere's geometry, not its position in the
/// family list: reordering the family (e.g. swapping the query endpoints)
/// must not change the graph.
inline uint64_t sphere_sample_seed(uint64_t seed, const SpherePose& pose) {
    uint64_t h = bits_of(pose.center.x);
    h = (h * 0x100000001B3ull) ^ bits_of(pose.center.y);
    h = (h * 0x100000001B3ull) ^ bits_of(pose.center.z);
    h = (h * 0x100000001B3ull) ^ bits_of(pose.radius);
    return mix_seed(seed, h);
}

inline bool pose_less(const SpherePose& a, const SpherePose& b) {
    if (a.center.x != b.center.x) return a.center.x < b.center.x;
    if (a.center.y != b.center.y) return a.center.y < b.center.y;
    if (a.center.z != b.center.z) return a.center.z < b.center.z;
    return a.radius < b.radius;
}

/// Hop cost on one sphere; formula-identical to shortcut_distance but skips
/// the membership re-check (graph nodes are on-sphere by construction).
inline double hop_cost(const TransferGraph& g, int sphere_id, const Vec3& p, const Vec3& q) {
    const ScaledSphere& s = g.spheres[static_cast<size_t>(sphere_id)];
    if (s.scale == 1.0) return euclid(p, q);
    const Vec3 u = p - s.pose.center;
    const Vec3 v = q - s.pose.center;
    const double theta = std::atan2(norm(cross(u, v)), dot(u, v));
    if (theta <= g.sphere_threshold[static_cast<size_t>(sphere_id)]) return euclid(p, q);
    return 2.0 * s.pose.radius * s.scale + euclid(s.pose.center * 2.0 - p, q);
}

} // namespace detail

inline TransferGraph build_transfer_graph(const std::vector<ScaledSphere>& family,
                                          const DiscretizationConfig& cfg,
                                          std::span<const Vec3> terminals) {
    cfg.validate();
    if (family.empty()) throw std::invalid_argument("build_transfer_graph: empty family");
    TransferGraph g;
    g.spheres = family;
    g.sphere_threshold.reserve(family.size());
    for (const auto& s : family)
        g.sphere_threshold.push_back(kPi - 2.0 * alpha(ShortcutParam(s.scale)));

    for (size_t i = 0; i < family.size(); ++i) {
        auto pts = sample_sphere(family[i].pose, cfg.nodes_per_sphere,
                                 detail::sphere_sample_seed(cfg.seed, family[i].pose));
        g.nodes.insert(g.nodes.end(), pts.begin(), pts.end());
    }
    // Transfer nodes on pairwise intersection circles; tangency contributes
    // the contact point itself. Pairs are canonicalized so the circle points
    // do not depend on the family order either.
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = i + 1; j < family.size(); ++j) {
            const bool swap = detail::pose_less(family[j].pose, family[i].pose);
            const SpherePose& a = swap ? family[j].pose : family[i].pose;
            const SpherePose& b = swap ? family[i].pose : family[j].pose;
            const auto circle = sphere_intersection_circle(a, b);
            if (!circle) continue;
            if (circle->radius <= kOnSphereTol) {
                g.nodes.push_back(circle->center);
            } else if (cfg.intersection_nodes > 0) {
                auto pts = sample_circle(*circle, cfg.intersection_nodes,
                                         detail::sphere_sample_seed(
                                             detail::sphere_sample_seed(cfg.seed, a), b));
                g.nodes.insert(g.nodes.end(), pts.begin(), pts.end());
            }
        }
    }
    for (const Vec3& t : terminals) {
        g.terminals.push_back(static_cast<int>(g.nodes.size()));
        g.nodes.push_back(t);
    }

    g.sphere_nodes.assign(family.size(), {});
    g.node_spheres.assign(g.nodes.size(), {});
    for (size_t n = 0; n < g.nodes.size(); ++n) {
        for (size_t s = 0; s < family.size(); ++s) {
            if (on_sphere(family[s].pose, g.nodes[n])) {
                g.sphere_nodes[s].push_back(static_cast<int>(n));
                g.node_spheres[n].push_back(static_cast<int>(s));
            }
        }
    }
    for (size_t t = 0; t < g.terminals.size(); ++t) {
        if (g.node_spheres[static_cast<size_t>(g.terminals[t])].empty())
            throw NotInFamilyError("build_transfer_graph: terminal lies on no member sphere");
    }
    return g;
}

struct GraphPath {
    std::vector<int> node_ids;   // src..dst
    std::vector<int> sphere_ids; // one per hop
    double cost{0.0};
};

/// A* shortest path; heuristic_s0 * d_E(v, dst) is admissible and consistent
/// because every hop costs at least s0 times its chord.
inline std::optional<GraphPath> shortest_path(const TransferGraph& g, int src, int dst,
                                              double heuristic_s0) {
    const size_t n = g.node_count();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<char> settled(n, 0);
    std::vector<int> pred(n, -1), pred_sphere(n, -1);
    const Vec3 target = g.nodes[static_cast<size_t>(dst)];

    using Entry = std::pair<double, int>; // (f, node): lexicographic tie-break
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    dist[static_cast<size_t>(src)] = 0.0;
    pq.push({heuristic_s0 * euclid(g.nodes[static_cast<size_t>(src)], target), src});

    while (!pq.empty()) {
        const auto [f_u, u] = pq.top();
        pq.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        if (u == dst) break;
        const Vec3& pu = g.nodes[static_cast<size_t>(u)];
        for (int s : g.node_spheres[static_cast<size_t>(u)]) {
            for (int v : g.sphere_nodes[static_cast<size_t>(s)]) {
                if (settled[static_cast<size_t>(v)]) continue;
                const double w = detail::hop_cost(g, s, pu, g.nodes[static_cast<size_t>(v)]);
                const double cand = dist[static_cast<size_t>(u)] + w;
                if (cand < dist[static_cast<size_t>(v)]) {
                    dist[static_cast<size_t>(v)] = cand;
                    pred[static_cast<size_t>(v)] = u;
                    pred_sphere[static_cast<size_t>(v)] = s;
                    pq.push({cand + heuristic_s0 * euclid(g.nodes[static_cast<size_t>(v)], target),
                             v});
                }
            }
        }
    }
    if (!settled[static_cast<size_t>(dst)]) return std::nullopt;

    GraphPath path;
    path.cost = dist[static_cast<size_t>(dst)];
    for (int v = dst; v != -1; v = pred[static_cast<size_t>(v)]) {
        path.node_ids.push_back(v);
        if (pred[static_cast<size_t>(v)] != -1)
            path.sphere_ids.push_back(pred_sphere[static_cast<size_t>(v)]);
    }
    std::reverse(path.node_ids.begin(), path.node_ids.end());
    std::reverse(path.sphere_ids.begin(), path.sphere_ids.end());
    return path;
}

/// Materialize a graph path as a chain.
inline Chain path_to_chain(const TransferGraph& g, const GraphPath& path) {
    Chain chain;
    chain.points.push_back(g.nodes[static_cast<size_t>(path.node_ids.front())]);
    for (size_t h = 0; h < path.sphere_ids.size(); ++h) {
        chain.points.push_back(g.nodes[static_cast<size_t>(path.node_ids[h + 1])]);
        chain.spheres.push_back(g.spheres[static_cast<size_t>(path.sphere_ids[h])]);
    }
    return chain;
}

} // namespace ballmetric
