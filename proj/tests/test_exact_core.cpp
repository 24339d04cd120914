#include <catch2/catch_amalgamated.hpp>

#include "selnet/geometry.hpp"
#include "selnet/prng.hpp"

using namespace selnet;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

Point random_point(SplitMix64& rng, long range) {
    return pt(rng.int_in(-range, range), rng.int_in(-range, range));
}

} // namespace

TEST_CASE("orientation canonical frames") {
    CHECK(orientation({pt(0, 0), pt(1, 0), pt(0, 1)}) == 1);
    CHECK(orientation({pt(0, 0), pt(1, 1), pt(2, 2)}) == 0);
    CHECK(orientation({pt(0, 0), pt(0, 1), pt(1, 0)}) == -1);
    CHECK(orientation({Point{Rational(0)}, Point{Rational(1)}}) == 1);
    CHECK_THROWS_AS(orientation({pt(0, 0), pt(1, 0)}), Error);
}

TEST_CASE("orientation is antisymmetric under swaps") {
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<Point> s = {random_point(rng, 50), random_point(rng, 50), random_point(rng, 50)};
        int base = orientation(s);
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                auto swapped = s;
                std::swap(swapped[a], swapped[b]);
                CHECK(orientation(swapped) == -base);
            }
        }
    }
}

TEST_CASE("hull membership against a triangle") {
    std::vector<Point> tri = {pt(0, 0), pt(4, 0), pt(0, 4)};
    CHECK(hull_membership(pt(1, 1), tri) == HullMembership::RelativeInterior);
    CHECK(hull_membership(pt(2, 0), tri) == HullMembership::RelativeBoundary);
    CHECK(hull_membership(pt(5, 5), tri) == HullMembership::Outside);
    CHECK(hull_membership(pt(0, 0), tri) == HullMembership::RelativeBoundary);
}

TEST_CASE("hull membership relative to the affine hull") {
    // A segment in the plane: interior means interior within its line.
    std::vector<Point> seg = {pt(0, 0), pt(2, 2)};
    CHECK(hull_membership(pt(1, 1), seg) == HullMembership::RelativeInterior);
    CHECK(hull_membership(pt(2, 2), seg) == HullMembership::RelativeBoundary);
    CHECK(hull_membership(pt(1, 2), seg) == HullMembership::Outside);
    // A single point is its own relative interior.
    CHECK(hull_membership(pt(3, 4), {pt(3, 4)}) == HullMembership::RelativeInterior);
    CHECK(hull_membership(pt(3, 5), {pt(3, 4)}) == HullMembership::Outside);
}

TEST_CASE("hull membership agrees with the 2D sign tests") {
    SplitMix64 rng(17);
    for (int i = 0; i < 150; ++i) {
        Point a = random_point(rng, 20), b = random_point(rng, 20), c = random_point(rng, 20);
        Point x = random_point(rng, 25);
        CHECK(point_in_triangle(x, a, b, c) == hull_membership(x, {a, b, c}));
    }
    for (int i = 0; i < 60; ++i) {
        std::vector<Point> cloud;
        for (int k = 0; k < 8; ++k) cloud.push_back(random_point(rng, 15));
        auto hull_idx = convex_hull_2d(cloud);
        std::vector<Point> hull;
        for (auto h : hull_idx) hull.push_back(cloud[h]);
        Point x = random_point(rng, 18);
        CHECK(point_in_convex_polygon(x, hull) == hull_membership(x, cloud));
    }
}

TEST_CASE("lexicographic minimum of hull intersections") {
    SECTION("single hull: the lex-smallest vertex") {
        auto r = lex_min_intersection({{pt(2, 3), pt(1, 5), pt(1, 2)}});
        REQUIRE(r.has_value());
        CHECK(*r == pt(1, 2));
    }
    SECTION("two crossing segments") {
        auto r = lex_min_intersection({{pt(0, 0), pt(4, 2)}, {pt(0, 2), pt(4, 0)}});
        REQUIRE(r.has_value());
        CHECK(*r == pt(2, 1));
    }
    SECTION("two overlapping triangles") {
        auto r = lex_min_intersection(
            {{pt(0, 0), pt(4, 0), pt(0, 4)}, {pt(1, 1), pt(5, 1), pt(1, 5)}});
        REQUIRE(r.has_value());
        CHECK(*r == pt(1, 1));
    }
    SECTION("disjoint hulls") {
        CHECK_FALSE(lex_min_intersection({{pt(0, 0), pt(1, 0)}, {pt(5, 5), pt(6, 5)}}).has_value());
    }
}

TEST_CASE("lex minimum is minimal: strict bound makes it infeasible") {
    std::vector<std::vector<Point>> hulls = {{pt(0, 0), pt(4, 2)}, {pt(0, 2), pt(4, 0)}};
    auto r = lex_min_intersection(hulls);
    REQUIRE(r.has_value());
    for (const auto& h : hulls) CHECK(hull_membership(*r, h) != HullMembership::Outside);
    // A box forcing x1 <= opt1 - 1/1000 empties the intersection.
    Rational bound = (*r)[0] - make_rational(1, 1000);
    Rational big(1000);
    std::vector<Point> box1 = {pt(-big, -big), pt(bound, -big), pt(-big, big), pt(bound, big)};
    auto hulls1 = hulls;
    hulls1.push_back(box1);
    CHECK_FALSE(lex_min_intersection(hulls1).has_value());
    // Pinning x1 = opt1 and forcing x2 <= opt2 - 1/1000 is infeasible too.
    Rational bound2 = (*r)[1] - make_rational(1, 1000);
    std::vector<Point> box2 = {pt((*r)[0], -big), pt((*r)[0], bound2)};
    auto hulls2 = hulls;
    hulls2.push_back(box2);
    CHECK_FALSE(lex_min_intersection(hulls2).has_value());
}

TEST_CASE("lex-min of many hulls equals lex-min of some d-subfamily") {
    SplitMix64 rng(23);
    int tested = 0;
    for (int trial = 0; trial < 80; ++trial) {
        // Hulls built to share the point z: each cloud is recentred so z is
        // its centroid, landing z in every hull.
        Point z = random_point(rng, 10);
        std::size_t j = 3 + rng.below(2);
        std::vector<std::vector<Point>> hulls;
        for (std::size_t h = 0; h < j; ++h) {
            std::size_t k = 3 + rng.below(3);
            std::vector<Point> cloud;
            Rational cx(0), cy(0);
            for (std::size_t i = 0; i < k; ++i) {
                cloud.push_back(random_point(rng, 30));
                cx += cloud.back()[0];
                cy += cloud.back()[1];
            }
            cx /= static_cast<long>(k);
            cy /= static_cast<long>(k);
            for (auto& p : cloud) {
                p[0] += z[0] - cx;
                p[1] += z[1] - cy;
            }
            hulls.push_back(std::move(cloud));
        }
        auto full = lex_min_intersection(hulls);
        REQUIRE(full.has_value());
        bool found = false;
        for (std::size_t a = 0; a < j && !found; ++a) {
            for (std::size_t b = a + 1; b < j && !found; ++b) {
                auto sub = lex_min_intersection({hulls[a], hulls[b]});
                if (sub.has_value() && *sub == *full) found = true;
            }
        }
        CHECK(found);
        ++tested;
    }
    CHECK(tested == 80);
}

TEST_CASE("affine solve reproduces barycentric coordinates") {
    auto a = affine_solve({pt(1, 1), pt(4, 1), pt(1, 4)}, pt(2, 2));
    REQUIRE(a.size() == 3);
    CHECK(a[0] == make_rational(1, 3));
    CHECK(a[1] == make_rational(1, 3));
    CHECK(a[2] == make_rational(1, 3));

    auto v = affine_solve({pt(0, 0), pt(1, 0), pt(0, 1)}, pt(0, 0));
    CHECK(v == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

    auto e = affine_solve({pt(0, 0), pt(2, 0), pt(0, 2)}, pt(1, 1));
    CHECK(e == std::vector<Rational>{Rational(0), make_rational(1, 2), make_rational(1, 2)});

    CHECK_THROWS_AS(affine_solve({pt(0, 0), pt(1, 1), pt(2, 2)}, pt(1, 0)), Error);
}

TEST_CASE("affine solve round trip on random frames") {
    SplitMix64 rng(31);
    for (int i = 0; i < 100; ++i) {
        std::vector<Point> frame = {random_point(rng, 40), random_point(rng, 40),
                                    random_point(rng, 40)};
        if (orientation(frame) == 0) continue;
        Point target = random_point(rng, 60);
        auto alpha = affine_solve(frame, target);
        Rational sum(0), x(0), y(0);
        for (std::size_t k = 0; k < 3; ++k) {
            sum += alpha[k];
            x += alpha[k] * frame[k][0];
            y += alpha[k] * frame[k][1];
        }
        CHECK(sum == 1);
        CHECK(x == target[0]);
        CHECK(y == target[1]);
    }
}

TEST_CASE("static general position") {
    CHECK(static_general_position(PointSet::of(2, {pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)})));
    CHECK_FALSE(static_general_position(PointSet::of(2, {pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 0)})));
    CHECK(static_general_position(PointSet::of(1, {Point{Rational(0)}, Point{Rational(1)}})));
    CHECK_FALSE(static_general_position(PointSet::of(1, {Point{Rational(3)}, Point{Rational(3)}})));
}

TEST_CASE("interior points witness their own lex minimum") {
    SplitMix64 rng(41);
    for (int i = 0; i < 60; ++i) {
        std::vector<Point> tri = {random_point(rng, 30), random_point(rng, 30),
                                  random_point(rng, 30)};
        if (orientation(tri) == 0) continue;
        // Random strict convex combination.
        long w0 = rng.int_in(1, 5), w1 = rng.int_in(1, 5), w2 = rng.int_in(1, 5);
        Rational total(w0 + w1 + w2);
        Point x = pt(Rational(0), Rational(0));
        std::vector<long> w = {w0, w1, w2};
        for (int k = 0; k < 3; ++k) {
            x[0] += Rational(w[k]) * tri[k][0] / total;
            x[1] += Rational(w[k]) * tri[k][1] / total;
        }
        REQUIRE(hull_membership(x, tri) == HullMembership::RelativeInterior);
        auto r = lex_min_intersection({tri, {x}});
        REQUIRE(r.has_value());
        CHECK(*r == x);
        // Not on any proper face of the affinely independent triangle.
        CHECK(hull_membership(x, {tri[0], tri[1]}) == HullMembership::Outside);
        CHECK(hull_membership(x, {tri[1], tri[2]}) == HullMembership::Outside);
        CHECK(hull_membership(x, {tri[0], tri[2]}) == HullMembership::Outside);
    }
}
