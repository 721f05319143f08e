#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "ballmetric/geometry.hpp"

using namespace ballmetric;

TEST_CASE("euclid basics") {
    CHECK(euclid({0, 0, 0}, {0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-15));
    const Vec3 p{0.3, -0.2, 0.7};
    CHECK(euclid(p, p) == 0.0);
    CHECK(euclid({0, 0, 1}, {0, 0, -1}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("euclid metric axioms on sampled triples") {
    SplitMix64 g(11);
    const SpherePose unit({0, 0, 0}, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 a = random_on_sphere(unit, g) * g.next_double();
        const Vec3 b = random_on_sphere(unit, g) * g.next_double();
        const Vec3 c = random_on_sphere(unit, g) * g.next_double();
        CHECK(std::fabs(euclid(a, b) - euclid(b, a)) <= 1e-12);
        CHECK(euclid(a, b) + euclid(b, c) >= euclid(a, c) - 1e-12);
    }
}

TEST_CASE("central_angle canonical values") {
    const SpherePose unit({0, 0, 0}, 1.0);
    CHECK(central_angle(unit, {0, 0, 1}, {0, 0, -1}) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(central_angle(unit, {0, 0, 1}, {1, 0, 0}) == doctest::Approx(kPi / 2).epsilon(1e-12));
    const SpherePose half({0.5, 0, 0}, 0.5);
    CHECK(central_angle(half, {1, 0, 0}, {0, 0, 0}) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("central_angle rejects off-sphere points") {
    const SpherePose unit({0, 0, 0}, 1.0);
    CHECK_THROWS_AS(central_angle(unit, {0, 0, 0.5}, {0, 0, 1}), OffSphereError);
    CHECK_THROWS_AS(central_angle(unit, {0, 0, 1}, {0, 0, 1.001}), OffSphereError);
}

TEST_CASE("antipode examples and involution") {
    const SpherePose unit({0, 0, 0}, 1.0);
    const Vec3 a = antipode(unit, {0, 0, 1});
    CHECK(euclid(a, {0, 0, -1}) <= 1e-15);
    const SpherePose half({0.5, 0, 0}, 0.5);
    CHECK(euclid(antipode(half, {1, 0, 0}), {0, 0, 0}) <= 1e-15);

    SplitMix64 g(3);
    for (int i = 0; i < 500; ++i) {
        const Vec3 p = random_on_sphere(half, g);
        const Vec3 q = antipode(half, p);
        CHECK(on_sphere(half, q));
        CHECK(euclid(antipode(half, q), p) <= 1e-12);
        CHECK(central_angle(half, p, q) == doctest::Approx(kPi).epsilon(1e-9));
    }
}

TEST_CASE("sample_sphere: on-sphere, deterministic, nested") {
    const SpherePose s({0.1, -0.2, 0.05}, 0.6);
    const auto one = sample_sphere(s, 1, 42);
    REQUIRE(one.size() == 1);
    CHECK(on_sphere(s, one[0]));

    const auto a = sample_sphere(s, 200, 7);
    const auto b = sample_sphere(s, 200, 7);
    for (int i = 0; i < 200; ++i) CHECK(a[i] == b[i]);

    const auto big = sample_sphere(s, 400, 7);
    for (int i = 0; i < 200; ++i) CHECK(a[i] == big[i]); // prefix property

    for (const auto& p : big) CHECK(on_sphere(s, p));

    const auto other_seed = sample_sphere(s, 200, 8);
    bool all_equal = true;
    for (int i = 0; i < 200; ++i) all_equal = all_equal && (a[i] == other_seed[i]);
    CHECK_FALSE(all_equal);
}

TEST_CASE("sample_sphere: max nearest-neighbor gap below 4r/sqrt(n)") {
    const SpherePose s({0, 0, 0}, 0.75);
    const int n = 1000;
    const auto pts = sample_sphere(s, n, 0);
    // brute-force nearest-neighbor scan over the emitted set
    double max_nn = 0.0;
    for (int i = 0; i < n; ++i) {
        double best = 1e300;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            best = std::min(best, euclid(pts[i], pts[j]));
        }
        max_nn = std::max(max_nn, best);
    }
    CHECK(max_nn < 4.0 * s.radius / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("apply_isometry examples") {
    const Isometry id;
    const Vec3 p{0.2, 0.3, -0.1};
    CHECK(euclid(apply_isometry(id, p), p) == 0.0);

    const Isometry flip(rotation_about_axis({0, 0, 1}, kPi), {0, 0, 0});
    CHECK(euclid(apply_isometry(flip, {1, 0, 0}), {-1, 0, 0}) <= 1e-15);
}

TEST_CASE("apply_isometry preserves distances on sampled pairs") {
    SplitMix64 g(19);
    const SpherePose unit({0, 0, 0}, 1.0);
    const Isometry iso(random_rotation(g), {0.07, -0.03, 0.11});
    for (int i = 0; i < 1000; ++i) {
        const Vec3 p = random_on_sphere(unit, g) * g.next_double();
        const Vec3 q = random_on_sphere(unit, g) * g.next_double();
        const double before = euclid(p, q);
        const double after = euclid(apply_isometry(iso, p), apply_isometry(iso, q));
        CHECK(std::fabs(after - before) <= 1e-12);
    }
}

TEST_CASE("Isometry validates orthogonality") {
    Mat3 skew;
    skew.m = {1, 0.1, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(Isometry(skew, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("SpherePose admissibility") {
    CHECK_THROWS_AS(SpherePose({0.8, 0, 0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SpherePose({0, 0, 0}, 0.0), std::invalid_argument);
    CHECK_NOTHROW(SpherePose({0.5, 0, 0}, 0.5));
    CHECK_NOTHROW(SpherePose({0, 0, 0}, 1.0));
}

TEST_CASE("sphere_intersection_circle: transversal case") {
    // equal spheres with center distance = radius -> circle at the midplane
    // of radius sqrt(3)/2 * r (admissible spheres; same analytic shape)
    const SpherePose a({0, 0, 0}, 0.5);
    const SpherePose b({0.5, 0, 0}, 0.5);
    const auto c = sphere_intersection_circle(a, b);
    REQUIRE(c.has_value());
    CHECK(c->center.x == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c->radius == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-14));
    CHECK(std::fabs(c->normal.x - 1.0) <= 1e-15);
    // cross-check against point sampling: every circle point on both spheres
    for (const Vec3& p : sample_circle(*c, 64, 5)) {
        CHECK(on_sphere(a, p));
        CHECK(on_sphere(b, p));
    }
}

TEST_CASE("sphere_intersection_circle: disjoint and nested give nothing") {
    const SpherePose a({-0.6, 0, 0}, 0.2);
    const SpherePose b({0.6, 0, 0}, 0.2);
    CHECK_FALSE(sphere_intersection_circle(a, b).has_value());
    const SpherePose outer({0, 0, 0}, 0.9);
    const SpherePose inner({0.05, 0, 0}, 0.2);
    CHECK_FALSE(sphere_intersection_circle(outer, inner).has_value());
}

TEST_CASE("sphere_intersection_circle: internal tangency is a point") {
    const SpherePose outer({0, 0, 0}, 1.0);
    const SpherePose inner({0.5, 0, 0}, 0.5);
    const auto c = sphere_intersection_circle(outer, inner);
    REQUIRE(c.has_value());
    CHECK(c->radius == 0.0);
    CHECK(euclid(c->center, {1, 0, 0}) <= 1e-12);
}
