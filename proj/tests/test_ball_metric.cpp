#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ballmetric/estimate.hpp"
#include "ballmetric/transfer_graph.hpp"

using namespace ballmetric;

namespace {

/// Explicit family of four overlapping spheres strung along the x axis;
/// terminals (+-0.5, 0, 0) sit on the outermost spheres, so the segment
/// between them has length exactly 1.
std::vector<ScaledSphere> four_sphere_row(double scale) {
    std::vector<ScaledSphere> row;
    for (double cx : {-0.3, -0.1, 0.1, 0.3})
        row.emplace_back(SpherePose({cx, 0, 0}, 0.2), scale);
    return row;
}

/// Bellman-Ford over materialized edges: an independent oracle for the
/// shortest-path search. rounds < 0 relaxes to the fixpoint.
double bellman_ford_cost(const TransferGraph& g, int src, int dst, int rounds) {
    struct Edge {
        int u, v;
        double w;
    };
    std::vector<Edge> edges;
    for (size_t s = 0; s < g.spheres.size(); ++s) {
        const auto& ns = g.sphere_nodes[s];
        for (size_t i = 0; i < ns.size(); ++i) {
            for (size_t j = i + 1; j < ns.size(); ++j) {
                const double w = shortcut_distance(g.spheres[s].pose,
                                                   ShortcutParam(g.spheres[s].scale),
                                                   g.nodes[static_cast<size_t>(ns[i])],
                                                   g.nodes[static_cast<size_t>(ns[j])])
                                     .value;
                edges.push_back({ns[i], ns[j], w});
            }
        }
    }
    std::vector<double> dist(g.node_count(), 1e300);
    dist[static_cast<size_t>(src)] = 0.0;
    const int max_rounds = rounds < 0 ? static_cast<int>(g.node_count()) : rounds;
    for (int r = 0; r < max_rounds; ++r) {
        bool changed = false;
        for (const auto& e : edges) {
            if (dist[static_cast<size_t>(e.u)] + e.w < dist[static_cast<size_t>(e.v)]) {
                dist[static_cast<size_t>(e.v)] = dist[static_cast<size_t>(e.u)] + e.w;
                changed = true;
            }
            if (dist[static_cast<size_t>(e.v)] + e.w < dist[static_cast<size_t>(e.u)]) {
                dist[static_cast<size_t>(e.u)] = dist[static_cast<size_t>(e.v)] + e.w;
                changed = true;
            }
        }
        if (!changed && rounds < 0) break;
    }
    return dist[static_cast<size_t>(dst)];
}

} // namespace

TEST_CASE("one sphere: complete graph on samples plus terminals") {
    const SpherePose pose({0, 0, 0}, 0.5);
    std::vector<ScaledSphere> fam{ScaledSphere(pose, 0.8)};
    SplitMix64 g(4);
    const Vec3 p = random_on_sphere(pose, g);
    const Vec3 q = random_on_sphere(pose, g);
    const std::array<Vec3, 2> terms{p, q};
    const DiscretizationConfig cfg{16, 4, 3};
    const auto graph = build_transfer_graph(fam, cfg, terms);
    CHECK(graph.node_count() == 18);
    CHECK(graph.sphere_nodes[0].size() == 18); // every node hosted by the sphere
    for (const auto& spheres_of : graph.node_spheres) CHECK(spheres_of.size() == 1);
}

TEST_CASE("terminal off every sphere is rejected") {
    std::vector<ScaledSphere> fam{ScaledSphere(SpherePose({0, 0, 0}, 0.5), 1.0)};
    const std::array<Vec3, 2> terms{Vec3{0, 0, 0.5}, Vec3{0, 0, 0.1}};
    CHECK_THROWS_AS(build_transfer_graph(fam, DiscretizationConfig{8, 0, 0}, terms),
                    NotInFamilyError);
}

TEST_CASE("tangent spheres contribute the tangency point as a node") {
    std::vector<ScaledSphere> fam{ScaledSphere(SpherePose({-0.2, 0, 0}, 0.2), 1.0),
                                  ScaledSphere(SpherePose({0.2, 0, 0}, 0.2), 1.0)};
    const std::array<Vec3, 2> terms{Vec3{-0.4, 0, 0}, Vec3{0.4, 0, 0}};
    const auto graph = build_transfer_graph(fam, DiscretizationConfig{8, 4, 1}, terms);
    bool tangency_found = false;
    for (size_t n = 0; n < graph.node_count(); ++n) {
        if (euclid(graph.nodes[n], {0, 0, 0}) <= 1e-12 && graph.node_spheres[n].size() == 2)
            tangency_found = true;
    }
    CHECK(tangency_found);
    // and the path through it connects the terminals
    const auto est = estimate_distance(SphereFamily::explicit_finite(fam), {-0.4, 0, 0},
                                       {0.4, 0, 0}, DiscretizationConfig{8, 4, 1});
    CHECK(est.upper == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("disconnected explicit family raises NoChain") {
    std::vector<ScaledSphere> fam{ScaledSphere(SpherePose({-0.6, 0, 0}, 0.15), 1.0),
                                  ScaledSphere(SpherePose({0.6, 0, 0}, 0.15), 1.0)};
    const auto family = SphereFamily::explicit_finite(fam);
    CHECK_THROWS_AS(
        estimate_distance(family, {-0.75, 0, 0}, {0.75, 0, 0}, DiscretizationConfig{8, 4, 0}),
        NoChainError);
}

TEST_CASE("single-sphere estimate is the exact shortcut distance") {
    const SpherePose pose({0.1, -0.1, 0.2}, 0.4);
    const auto family = SphereFamily::explicit_finite({ScaledSphere(pose, 0.45)});
    SplitMix64 g(8);
    for (int i = 0; i < 25; ++i) {
        const Vec3 p = random_on_sphere(pose, g);
        const Vec3 q = random_on_sphere(pose, g);
        const auto est = estimate_distance(family, p, q, DiscretizationConfig{16, 4, 2});
        const double direct = shortcut_distance(pose, ShortcutParam(0.45), p, q).value;
        CHECK(est.upper == direct);
        CHECK(est.witness.hops() == 1);
        CHECK(euclid(est.witness.points.front(), p) == 0.0);
        CHECK(euclid(est.witness.points.back(), q) == 0.0);
    }
}

TEST_CASE("four overlapping spheres at s = 0.6: bracket and oracle") {
    const auto spheres = four_sphere_row(0.6);
    const auto family = SphereFamily::explicit_finite(spheres);
    const Vec3 p{-0.5, 0, 0}, q{0.5, 0, 0};
    const DiscretizationConfig cfg{12, 6, 11};
    const auto est = estimate_distance(family, p, q, cfg);
    CHECK(est.upper >= 0.6 - 1e-12);
    CHECK(est.upper <= 1.0 + 1e-9);
    CHECK(est.lower == doctest::Approx(0.6).epsilon(1e-12));

    const std::array<Vec3, 2> terms{p, q};
    const auto graph = build_transfer_graph(spheres, cfg, terms);
    // full-relaxation Bellman-Ford agrees with the search
    const double oracle = bellman_ford_cost(graph, graph.terminals[0], graph.terminals[1], -1);
    CHECK(est.upper == doctest::Approx(oracle).epsilon(1e-12));
    // and the 4-hop-restricted minimum already sits in the bracket
    const double hop4 = bellman_ford_cost(graph, graph.terminals[0], graph.terminals[1], 4);
    CHECK(hop4 >= est.upper - 1e-12);
    CHECK(hop4 <= 1.0 + 1e-9);
}

TEST_CASE("witness reproduces the upper bound and the endpoints") {
    const auto spheres = four_sphere_row(0.6);
    const auto family = SphereFamily::explicit_finite(spheres);
    const Vec3 p{-0.5, 0, 0}, q{0.5, 0, 0};
    const auto est = estimate_distance(family, p, q, DiscretizationConfig{12, 6, 11});
    CHECK(std::fabs(chain_cost(family, est.witness) - est.upper) <= 1e-12);
    CHECK(euclid(est.witness.points.front(), p) == 0.0);
    CHECK(euclid(est.witness.points.back(), q) == 0.0);
    CHECK(est.lower <= est.upper + 1e-12);
}

TEST_CASE("estimator is symmetric in its arguments") {
    const auto family = SphereFamily::explicit_finite(four_sphere_row(0.7));
    const Vec3 p{-0.5, 0, 0}, q{0.5, 0, 0};
    const DiscretizationConfig cfg{12, 6, 5};
    CHECK(std::fabs(estimate_distance(family, p, q, cfg).upper -
                    estimate_distance(family, q, p, cfg).upper) <= 1e-12);

    const auto cover = SphereFamily::segment_cover(0.25, 0.5);
    const Vec3 a{0.2, 0.1, -0.3}, b{-0.4, 0.2, 0.1};
    CHECK(std::fabs(estimate_distance(cover, a, b, cfg).upper -
                    estimate_distance(cover, b, a, cfg).upper) <= 1e-12);
}

TEST_CASE("degenerate query p = q") {
    const auto cover = SphereFamily::segment_cover(0.25, 1.0);
    const Vec3 p{0.3, -0.2, 0.4};
    const auto est = estimate_distance(cover, p, p, DiscretizationConfig{8, 4, 0});
    CHECK(est.upper == 0.0);
    CHECK(est.lower == 0.0);
    CHECK(std::fabs(chain_cost(cover, est.witness)) <= 1e-15);
}

TEST_CASE("segment cover at s0 = 1: upper = lower = d_E") {
    const auto cover = SphereFamily::segment_cover(0.25, 1.0);
    SplitMix64 g(21);
    for (int i = 0; i < 20; ++i) {
        const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.9);
        const Vec3 q = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.9);
        if (euclid(p, q) < 1e-3) continue;
        const auto est = estimate_distance(cover, p, q, DiscretizationConfig{32, 4, 7});
        CHECK(std::fabs(est.upper - euclid(p, q)) <= 1e-9);
        CHECK(std::fabs(est.lower - euclid(p, q)) <= 1e-12);
    }
}

TEST_CASE("segment cover at s0 = 0.5: bracket is the scaled sandwich") {
    const auto cover = SphereFamily::segment_cover(0.25, 0.5);
    SplitMix64 g(22);
    for (int i = 0; i < 20; ++i) {
        const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.9);
        const Vec3 q = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.9);
        const double de = euclid(p, q);
        if (de < 1e-3) continue;
        const auto est = estimate_distance(cover, p, q, DiscretizationConfig{32, 4, 7});
        CHECK(est.upper >= 0.5 * de - 1e-9);
        CHECK(est.upper <= de + 1e-9);
        CHECK(est.lower == doctest::Approx(0.5 * de).epsilon(1e-12));
        // the antipodal route along diameter spheres realizes the lower envelope
        CHECK(est.upper <= 0.5 * de + 1e-6);
    }
}

TEST_CASE("boundary family: short pairs see no shortcut") {
    const auto fam =
        SphereFamily::boundary_shortcut(BoundaryFunction::spike({0, 0, 1}, 1.0, 0.1));
    SplitMix64 g(31);
    for (int i = 0; i < 8; ++i) {
        const Vec3 p = random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.0, 0.95);
        Vec3 q;
        do {
            q = p + random_on_sphere(SpherePose({0, 0, 0}, 1.0), g) * g.uniform(0.05, 0.45);
        } while (norm(q) > 1.0);
        const auto est = estimate_distance(fam, p, q, DiscretizationConfig{64, 8, 13});
        CHECK(std::fabs(est.upper - euclid(p, q)) <= 5e-3);
        CHECK(est.upper >= euclid(p, q) - 1e-9);
    }
}

TEST_CASE("boundary family: origin-to-boundary finds routes cheaper than the direct hop") {
    // spike of height 1 right at x0: the single tangent hop costs 1, but a
    // detour through a nearby flat tangent sphere costs about 1/2 + radius
    const Vec3 x0{0, 0, 1};
    const auto fam = SphereFamily::boundary_shortcut(BoundaryFunction::spike(x0, 1.0, 0.05));
    const auto est = estimate_distance(fam, {0, 0, 0}, x0, DiscretizationConfig{64, 8, 17});
    CHECK(est.upper < 0.7);  // ~0.5 + 0.05 + discretization
    CHECK(est.upper >= 0.5 - 1e-12);
    // constant f: the direct tangent hop is optimal
    const auto flat = SphereFamily::boundary_shortcut(BoundaryFunction::constant(0.0));
    const auto est2 = estimate_distance(flat, {0, 0, 0}, x0, DiscretizationConfig{64, 8, 17});
    CHECK(est2.upper == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("graph shortest-path distances are a pseudo metric on a fixed node set") {
    const auto spheres = four_sphere_row(0.8);
    std::vector<Vec3> terms;
    SplitMix64 g(41);
    for (int i = 0; i < 5; ++i) {
        const auto& s = spheres[static_cast<size_t>(i % 4)].pose;
        terms.push_back(random_on_sphere(s, g));
    }
    const auto graph = build_transfer_graph(spheres, DiscretizationConfig{10, 4, 19}, terms);
    double d[5][5];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const auto path = shortest_path(graph, graph.terminals[static_cast<size_t>(i)],
                                            graph.terminals[static_cast<size_t>(j)], 0.0);
            REQUIRE(path.has_value());
            d[i][j] = path->cost;
        }
    for (int i = 0; i < 5; ++i) {
        CHECK(d[i][i] == 0.0);
        for (int j = 0; j < 5; ++j) {
            CHECK(std::fabs(d[i][j] - d[j][i]) <= 1e-12);
            for (int k = 0; k < 5; ++k) CHECK(d[i][j] + d[j][k] >= d[i][k] - 1e-12);
        }
    }
}

TEST_CASE("convergence study: single sphere is exact from the first row") {
    const SpherePose pose({0, 0, 0}, 0.5);
    const auto family = SphereFamily::explicit_finite({ScaledSphere(pose, 0.5)});
    SplitMix64 g(51);
    const Vec3 p = random_on_sphere(pose, g), q = random_on_sphere(pose, g);
    std::vector<DiscretizationConfig> cfgs{{50, 4, 9}, {100, 4, 9}, {200, 4, 9}};
    const auto rows = convergence_study(family, p, q, cfgs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].upper == rows[1].upper);
    CHECK(rows[1].upper == rows[2].upper);
}

TEST_CASE("convergence study: nested refinements never increase the upper bound") {
    std::vector<ScaledSphere> fam{ScaledSphere(SpherePose({-0.15, 0, 0}, 0.25), 0.5),
                                  ScaledSphere(SpherePose({0.15, 0, 0.05}, 0.25), 0.5)};
    const auto family = SphereFamily::explicit_finite(fam);
    SplitMix64 g(61);
    const Vec3 p = random_on_sphere(fam[0].pose, g);
    const Vec3 q = random_on_sphere(fam[1].pose, g);
    std::vector<DiscretizationConfig> cfgs{{100, 8, 5}, {400, 8, 5}, {1600, 8, 5}};
    const auto rows = convergence_study(family, p, q, cfgs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].upper <= rows[0].upper);
    CHECK(rows[2].upper <= rows[1].upper);

    // mismatched seeds or shrinking budgets are rejected
    std::vector<DiscretizationConfig> bad{{100, 8, 5}, {400, 8, 6}};
    CHECK_THROWS_AS(convergence_study(family, p, q, bad), std::invalid_argument);
    std::vector<DiscretizationConfig> shrink{{400, 8, 5}, {100, 8, 5}};
    CHECK_THROWS_AS(convergence_study(family, p, q, shrink), std::invalid_argument);
}

TEST_CASE("convergence study: s = 1 cover rows all equal d_E") {
    const auto cover = SphereFamily::segment_cover(0.25, 1.0);
    const Vec3 p{-0.3, 0.1, 0}, q{0.4, -0.2, 0.1};
    std::vector<DiscretizationConfig> cfgs{{16, 4, 3}, {64, 4, 3}, {256, 4, 3}};
    const auto rows = convergence_study(cover, p, q, cfgs);
    for (const auto& r : rows) CHECK(std::fabs(r.upper - euclid(p, q)) <= 1e-9);
}

TEST_CASE("boundary family estimates are symmetric in the query order") {
    const auto fam =
        SphereFamily::boundary_shortcut(BoundaryFunction::spike({0, 0, 1}, 1.0, 0.05));
    const Vec3 origin{0, 0, 0};
    const Vec3 x{0, 0, 1};
    const DiscretizationConfig cfg{48, 8, 23};
    const double a = estimate_distance(fam, origin, x, cfg).upper;
    const double b = estimate_distance(fam, x, origin, cfg).upper;
    CHECK(std::fabs(a - b) <= 1e-12);
}

TEST_CASE("boundary family convergence is monotone under refinement") {
    const auto fam =
        SphereFamily::boundary_shortcut(BoundaryFunction::spike({0, 0, 1}, 1.0, 0.05));
    std::vector<DiscretizationConfig> cfgs{{64, 8, 29}, {128, 8, 29}, {256, 8, 29}};
    const auto rows = convergence_study(fam, {0, 0, 0}, {0, 0, 1}, cfgs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].upper <= rows[0].upper + 1e-15);
    CHECK(rows[2].upper <= rows[1].upper + 1e-15);
    CHECK(rows[2].upper < 0.7); // the spike bypass is found at every budget
}

TEST_CASE("segment cover with a boundary endpoint still brackets") {
    const auto cover = SphereFamily::segment_cover(0.25, 0.5);
    const Vec3 x = normalized(Vec3{0.4, -0.1, 0.91});
    const Vec3 p{-0.2, 0.1, 0.2};
    const auto est = estimate_distance(cover, p, x, DiscretizationConfig{24, 4, 31});
    const double de = euclid(p, x);
    CHECK(est.upper >= 0.5 * de - 1e-9);
    CHECK(est.upper <= de + 1e-9);
    CHECK(est.lower <= est.upper + 1e-12);
    CHECK(std::fabs(chain_cost(cover, est.witness) - est.upper) <= 1e-12);
}
