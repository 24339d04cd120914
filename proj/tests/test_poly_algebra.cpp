#include <catch2/catch_amalgamated.hpp>

#include "selnet/polynomial.hpp"
#include "selnet/prng.hpp"
#include "selnet/rational_function.hpp"
#include "selnet/roots.hpp"

using namespace selnet;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) { return IntPolynomial::from_longs(coeffs); }

RationalFunction ratfun(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RationalFunction(poly(num), poly(den));
}

IntPolynomial random_poly(SplitMix64& rng, int max_degree, long coeff_range) {
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree + 1)));
    std::vector<Integer> c(deg + 1);
    for (auto& v : c) v = Integer(rng.int_in(-coeff_range, coeff_range));
    if (sgn(c.back()) == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    IntPolynomial a = poly({1, 2, 3}); // 3t^2+2t+1
    IntPolynomial b = poly({-1, 1});   // t-1
    CHECK((a * b).to_string() == "3*t^3 - t^2 - t - 1");
    CHECK((a + b).to_string() == "3*t^2 + 3*t");
    CHECK(a.derivative().to_string() == "6*t + 2");
    CHECK(a.value_at(make_rational(1, 2)) == make_rational(11, 4));
    CHECK(poly({0}).is_zero());
    CHECK(poly({5}).degree() == 0);
}

TEST_CASE("gcd and squarefree part") {
    IntPolynomial p = poly({-1, 1}) * poly({-1, 1}) * poly({-3, 1}); // (t-1)^2 (t-3)
    IntPolynomial g = poly_gcd(p, p.derivative());
    CHECK(g.to_string() == "t - 1");
    CHECK(squarefree_part(p) == poly({-1, 1}) * poly({-3, 1}));
    CHECK(poly_gcd(poly({-2, 1}), poly({-5, 1})).degree() == 0);
}

TEST_CASE("exact division round trips") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial a = random_poly(rng, 4, 40);
        IntPolynomial b = random_poly(rng, 3, 40);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == primitive_part(a) * Integer(content(a)));
    }
}

TEST_CASE("root isolation: sqrt2") {
    auto roots = isolate_nonneg_roots(poly({-2, 0, 1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo >= 1);
    CHECK(roots[0].hi <= 2);
    CHECK_FALSE(roots[0].exact());
}

TEST_CASE("root isolation: rational roots detected exactly") {
    // (t-1)(t-3) = t^2 - 4t + 3
    auto roots = isolate_nonneg_roots(poly({3, -4, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].exact());
    CHECK(roots[0].lo == 1);
    CHECK(roots[1].exact());
    CHECK(roots[1].lo == 3);
}

TEST_CASE("root isolation: negative roots excluded") {
    CHECK(isolate_nonneg_roots(poly({4, 1})).empty());
}

TEST_CASE("root isolation: root at zero and half") {
    auto roots = isolate_nonneg_roots(poly({0, -1, 2})); // t(2t-1)
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo == 0);
    CHECK(roots[0].exact());
    CHECK(roots[1].exact());
    CHECK(roots[1].lo == make_rational(1, 2));
}

TEST_CASE("root isolation: zero polynomial rejected") {
    CHECK_THROWS_AS(isolate_nonneg_roots(IntPolynomial{}), Error);
}

TEST_CASE("isolated intervals match Sturm counts on random polynomials") {
    SplitMix64 rng(42);
    int nonempty = 0;
    for (int i = 0; i < 300; ++i) {
        IntPolynomial p = random_poly(rng, 5, 30);
        if (p.is_zero() || p.degree() < 1) continue;
        IntPolynomial sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        auto roots = isolate_nonneg_roots(p);
        SturmChain chain(sf);
        Rational bound = cauchy_bound(sf);
        int expected = chain.count_open(Rational(0), bound) + (sf.sign_at(Rational(0)) == 0 ? 1 : 0);
        CHECK(static_cast<int>(roots.size()) == expected);
        for (const auto& r : roots) {
            CHECK(count_roots_closed(sf, r.lo, r.hi) == 1);
            if (!r.exact()) {
                CHECK(sf.sign_at(r.lo) * sf.sign_at(r.hi) < 0);
            } else {
                CHECK(sf.sign_at(r.lo) == 0);
            }
        }
        // pairwise disjoint and sorted
        for (std::size_t k = 0; k + 1 < roots.size(); ++k) CHECK(roots[k].hi < roots[k + 1].lo);
        if (!roots.empty()) ++nonempty;
    }
    CHECK(nonempty > 50);
}

TEST_CASE("sign_at_root and gcd certification") {
    // event: root of 2t-1 at 1/2
    RootInterval ev = isolate_nonneg_roots(poly({-1, 2}))[0];
    REQUIRE(ev.exact());

    auto tri = signs_near_root(poly({-3, 1}), ev); // t-3 near 1/2
    CHECK(tri.left == -1);
    CHECK(tri.at == -1);
    CHECK(tri.right == -1);

    auto self = signs_near_root(poly({-1, 2}) * poly({-1, 2}), ev); // (2t-1)^2
    CHECK(self.at == 0);
    CHECK(self.left == 1);
    CHECK(self.right == 1);

    auto lin = signs_near_root(poly({-1, 2}), ev);
    CHECK(lin.at == 0);
    CHECK(lin.left == -1);
    CHECK(lin.right == 1);

    // irrational event: sqrt2, tested polynomial shares the factor
    RootInterval s2 = isolate_nonneg_roots(poly({-2, 0, 1}))[0];
    CHECK(sign_at_root(poly({-2, 0, 1}) * poly({7, 1}), s2) == 0);
    CHECK(sign_at_root(poly({-3, 1}), s2) == -1);
    CHECK(sign_at_root(poly({-1, 1}), s2) == 1);
}

TEST_CASE("compare_roots orders algebraic numbers") {
    RootInterval s2 = isolate_nonneg_roots(poly({-2, 0, 1}))[0];  // sqrt2
    RootInterval s3 = isolate_nonneg_roots(poly({-3, 0, 1}))[0];  // sqrt3
    RootInterval s2b = isolate_nonneg_roots(poly({-4, 0, 2}))[0]; // sqrt2 again, scaled poly
    RootInterval half = RootInterval::rational_root(make_rational(1, 2));
    CHECK(compare_roots(s2, s3) == -1);
    CHECK(compare_roots(s3, s2) == 1);
    CHECK(compare_roots(s2, s2b) == 0);
    CHECK(compare_roots(half, s2) == -1);
    CHECK(compare_roots(half, RootInterval::rational_root(make_rational(1, 2))) == 0);
}

TEST_CASE("rational function reduction and beta") {
    RationalFunction f = ratfun({0, 2, 2}, {0, 2}); // (2t^2+2t)/(2t) reduces to t+1
    CHECK(f.numerator() == poly({1, 1}));
    CHECK(f.denominator() == poly({1}));
    CHECK(f.is_polynomial());
    CHECK(f.defined_at(Rational(0)));
    CHECK(f.beta() == 1);

    RationalFunction g = ratfun({0, 2}, {1});      // 2t
    RationalFunction h = ratfun({0, 0, 2}, {0, 1}); // 2t^2/t
    CHECK(identical(g, h));
    CHECK(g.beta() == 1);

    RationalFunction neg = ratfun({1}, {-1, -2}); // 1/(-2t-1) -> (-1)/(2t+1)
    CHECK(sgn(neg.denominator().leading()) > 0);
}

TEST_CASE("rational function evaluation") {
    RationalFunction f = ratfun({1, 1}, {-2, 1}); // (t+1)/(t-2)
    CHECK(*f.value_at(Rational(0)) == make_rational(-1, 2));
    CHECK_FALSE(f.value_at(Rational(2)).has_value());
    RationalFunction c = ratfun({5}, {1});
    CHECK(*c.value_at(make_rational(7, 3)) == 5);

    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        IntPolynomial num = random_poly(rng, 3, 25);
        IntPolynomial den = random_poly(rng, 2, 25);
        if (den.is_zero()) continue;
        RationalFunction rf(num, den);
        Rational t(static_cast<long>(rng.below(1000)), static_cast<long>(1 + rng.below(40)));
        t.canonicalize();
        if (den.sign_at(t) == 0) continue;
        auto v = rf.value_at(t);
        REQUIRE(v.has_value());
        if (num.is_zero()) {
            CHECK(sgn(*v) == 0);
        } else {
            CHECK(*v == num.value_at(t) / den.value_at(t));
        }
    }
}

TEST_CASE("cross difference roots") {
    RationalFunction f = ratfun({-2, 3}, {1}); // -2+3t
    RationalFunction g = ratfun({0, -1}, {1}); // -t
    auto cr = cross_difference_roots(f, g);
    REQUIRE_FALSE(cr.identical);
    REQUIRE(cr.roots.size() == 1);
    CHECK(cr.roots[0].exact());
    CHECK(cr.roots[0].lo == make_rational(1, 2));

    RationalFunction a = ratfun({-4, -4}, {1}); // -4-4t
    RationalFunction b = ratfun({2, 4}, {1});   // 2+4t
    CHECK(cross_difference_roots(a, b).roots.empty());

    RationalFunction p = ratfun({0, 2}, {1});
    RationalFunction q = ratfun({0, 0, 2}, {0, 1});
    CHECK(cross_difference_roots(p, q).identical);
}

TEST_CASE("cross difference is symmetric as a root set") {
    SplitMix64 rng(99);
    for (int i = 0; i < 100; ++i) {
        RationalFunction f(random_poly(rng, 2, 12), IntPolynomial::constant(Integer(1)));
        IntPolynomial den = random_poly(rng, 1, 6);
        if (den.is_zero()) den = IntPolynomial::constant(Integer(1));
        RationalFunction g(random_poly(rng, 2, 12), den);
        auto fg = cross_difference_roots(f, g);
        auto gf = cross_difference_roots(g, f);
        REQUIRE(fg.identical == gf.identical);
        REQUIRE(fg.roots.size() == gf.roots.size());
        for (std::size_t k = 0; k < fg.roots.size(); ++k)
            CHECK(compare_roots(fg.roots[k], gf.roots[k]) == 0);
    }
}
