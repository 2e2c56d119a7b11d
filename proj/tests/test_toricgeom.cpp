#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apolar/errors.hpp"
#include "apolar/toric.hpp"
#include "test_helpers.hpp"

using namespace apolar;
using namespace testutil;

namespace {

VirtualPolytope vp(const FanPtr& fan, const std::vector<int>& values) {
    return make_polytope(fan, std::vector<Rational>(values.begin(), values.end()));
}

// deterministically convexified random support vector
VirtualPolytope rand_convex(std::mt19937& rng, const FanPtr& fan) {
    std::uniform_int_distribution<int> coord(-4, 4);
    std::vector<Rational> vals(fan->num_rays());
    for (auto& v : vals) v = coord(rng);
    VirtualPolytope h = make_polytope(fan, vals);
    VirtualPolytope ample = find_ample(fan);
    int t = 0;
    while (!is_convex(h + Rational(t) * ample)) ++t;
    return h + Rational(t) * ample;
}

}  // namespace

TEST_CASE("fan validation accepts the projective plane") {
    FanCertificate cert = validate_fan(*fan_p2());
    CHECK(cert.num_rays == 3);
    CHECK(cert.num_cones == 3);
    CHECK(cert.num_walls == 3);
}

TEST_CASE("fan validation names failures") {
    // missing cone: wall shared once
    CHECK_THROWS_WITH_AS(
        (void)make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}),
        doctest::Contains("not complete"), MathError);
    // imprimitive ray
    CHECK_THROWS_WITH_AS((void)make_fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}),
                         doctest::Contains("not primitive"), MathError);
    // non-unimodular cone (singular quadric cone fan)
    CHECK_THROWS_WITH_AS(
        (void)make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}),
        doctest::Contains("not smooth"), MathError);
}

TEST_CASE("random rational directions land in some cone") {
    std::mt19937 rng(321);
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p3(), fan_p1xp1(), fan_hirzebruch(2)}) {
        for (int k = 0; k < 100; ++k) {
            auto u = rand_point(rng, fan->dim, 20, 7);
            CHECK(cone_containing(*fan, u) >= 0);
        }
    }
}

TEST_CASE("vertices: examples") {
    // P^1, h = (b, a) gives the segment [-a, b]
    auto vm = vertices(vp(fan_p1(), {3, 2}));
    CHECK(vm[0][0] == 3);
    CHECK(vm[1][0] == -2);

    auto vm2 = vertices(vp(fan_p2(), {1, 1, 1}));
    CHECK(vm2[0] == std::vector<Rational>{1, 1});
    CHECK(vm2[1] == std::vector<Rational>{1, -2});
    CHECK(vm2[2] == std::vector<Rational>{-2, 1});

    for (const auto& v : vertices(vp(fan_p2(), {0, 0, 0}))) {
        CHECK(v == std::vector<Rational>{0, 0});
    }
}

TEST_CASE("convexity tests") {
    CHECK(is_strictly_convex(vp(fan_p2(), {1, 1, 1})));
    CHECK(is_convex(vp(fan_p2(), {1, 1, 1})));
    CHECK_FALSE(is_convex(vp(fan_p1(), {1, -3})));

    // linear h (restriction of a global functional m = (1,2)) is convex but
    // never strictly convex
    FanPtr fp = fan_p2();
    std::vector<Rational> lin;
    for (const auto& ray : fp->rays) lin.push_back(Rational(1 * ray[0] + 2 * ray[1]));
    VirtualPolytope h = make_polytope(fp, lin);
    CHECK(is_convex(h));
    CHECK_FALSE(is_strictly_convex(h));
}

TEST_CASE("find_ample produces strictly convex integer support data") {
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p3(), fan_p1xp1(), fan_hirzebruch(3),
                            fan_triangle(), fan_simplex3()}) {
        VirtualPolytope h = find_ample(fan);
        CHECK(is_strictly_convex(h));
        for (const auto& v : h.values) CHECK(denominator(v) == 1);
    }
    // (1,1,1,1) is itself ample for P^1 x P^1
    CHECK(is_strictly_convex(vp(fan_p1xp1(), {1, 1, 1, 1})));
}

TEST_CASE("the twisted subdivision of projective 3-space is not projective") {
    FanPtr fan = fan_nonprojective();
    // smooth and complete ...
    FanCertificate cert = validate_fan(*fan);
    CHECK(cert.num_rays == 7);
    CHECK(cert.num_cones == 10);
    std::mt19937 rng(1212);
    for (int k = 0; k < 100; ++k) {
        CHECK(cone_containing(*fan, rand_point(rng, 3, 20, 7)) >= 0);
    }
    // ... yet no strictly convex support function exists
    CHECK_THROWS_WITH_AS((void)find_ample(fan), doctest::Contains("not projective"), MathError);
    // untwisting one pair of diagonals restores projectivity
    FanPtr untwisted = make_fan(3,
                                {{1, 0, 0},
                                 {0, 1, 0},
                                 {0, 0, 1},
                                 {-1, -1, -1},
                                 {0, -1, -1},
                                 {-1, 0, -1},
                                 {-1, -1, 0}},
                                {{0, 1, 2},
                                 {3, 4, 5},
                                 {0, 4, 5},
                                 {0, 1, 5},
                                 {3, 4, 6},
                                 {0, 4, 6},
                                 {0, 2, 6},
                                 {3, 5, 6},
                                 {1, 5, 6},
                                 {1, 2, 6}});
    CHECK(is_strictly_convex(find_ample(untwisted)));
}

TEST_CASE("fourier-motzkin feasibility core") {
    // x <= 0 and -x <= -1 cannot hold together
    std::vector<LinearConstraint> bad = {{{Rational(1)}, Rational(0)},
                                         {{Rational(-1)}, Rational(-1)}};
    CHECK_FALSE(fourier_motzkin_feasible(bad, 1));

    std::vector<LinearConstraint> ok = {{{Rational(1), Rational(1)}, Rational(4)},
                                        {{Rational(-1), Rational(0)}, Rational(-1)},
                                        {{Rational(0), Rational(-1)}, Rational(-1)}};
    auto x = fourier_motzkin_feasible(ok, 2);
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] <= 4);
    CHECK((*x)[0] >= 1);
    CHECK((*x)[1] >= 1);
}

TEST_CASE("integrate_convex: frozen values and the iterated oracle") {
    // standard triangle conv{(0,0),(1,0),(0,1)}: integral of x is 1/6
    auto tri = vp(fan_triangle(), {0, 0, 1});
    CHECK(integrate_convex(tri, {1, 0}).value == Rational(1, 6));
    CHECK(integrate_convex(tri, {1, 0}).value == iterated_simplex_integral({1, 0}));

    // segment volume: h = (b, a) has length a + b
    CHECK(integrate_convex(vp(fan_p1(), {3, 2}), {0}).value == 5);

    // unit square: integral of xy is 1/4
    auto sq = vp(fan_p1xp1(), {1, 0, 1, 0});
    CHECK(integrate_convex(sq, {1, 1}).value == Rational(1, 4));
    CHECK(integrate_convex(sq, {0, 0}).value == 1);

    // P^2 fan with h = (1,0,0): the triangle (0,0), (1,0), (1,-1), where
    // the integral of x is 1/3 by iterated integration by hand
    auto small = vp(fan_p2(), {1, 0, 0});
    CHECK(is_strictly_convex(small));
    CHECK(integrate_convex(small, {0, 0}).value == Rational(1, 2));
    CHECK(integrate_convex(small, {1, 0}).value == Rational(1, 3));

    // point polytope: degenerate, zero by convention
    auto origin = vp(fan_p2(), {0, 0, 0});
    auto r = integrate_convex(origin, {0, 0});
    CHECK(r.value == 0);
    CHECK(r.degenerate);
    CHECK_FALSE(integrate_convex(tri, {0, 0}).degenerate);

    CHECK_THROWS_AS(integrate_convex(vp(fan_p1(), {1, -3}), {0}), MathError);
}

TEST_CASE("Dirichlet values on standard simplices match iterated integration") {
    std::vector<std::pair<FanPtr, std::vector<int>>> simplices = {
        {fan_p1(), {1, 0}},        // [0,1]
        {fan_triangle(), {0, 0, 1}},
        {fan_simplex3(), {0, 0, 0, 1}},
    };
    for (const auto& [fan, hv] : simplices) {
        auto h = vp(fan, hv);
        // a few exponents per dimension (the full sweep runs in the acceptance suite)
        std::vector<Monomial> monos;
        if (fan->dim == 1) monos = {{0}, {1}, {3}};
        if (fan->dim == 2) monos = {{0, 0}, {1, 0}, {1, 1}, {2, 1}};
        if (fan->dim == 3) monos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 0, 1}};
        for (const auto& mono : monos) {
            CHECK(integrate_convex(h, mono).value == iterated_simplex_integral(mono));
        }
    }
}

TEST_CASE("degenerate trapezoid: repeated vertices contribute nothing") {
    // on F_2 with h = (1,1,1,1) two cones share a vertex and the trapezoid
    // collapses to the triangle (1,1), (-3,-1), (1,-1) of area 4
    auto h = vp(fan_hirzebruch(2), {1, 1, 1, 1});
    CHECK(is_convex(h));
    CHECK_FALSE(is_strictly_convex(h));
    auto r = integrate_convex(h, {0, 0});
    CHECK(r.value == 4);
    CHECK_FALSE(r.degenerate);
    CHECK(integrate_virtual(h, {0, 0}) == 4);
}

TEST_CASE("duplicate rays are rejected") {
    CHECK_THROWS_WITH_AS(
        (void)make_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 0}}, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}),
        doctest::Contains("listed twice"), MathError);
}

TEST_CASE("valuation: integrals add across a splitting") {
    // [0,2] = [0,1] + [1,2] on the line
    for (int m = 0; m <= 3; ++m) {
        Rational whole = integrate_convex(vp(fan_p1(), {2, 0}), {m}).value;
        Rational left = integrate_convex(vp(fan_p1(), {1, 0}), {m}).value;
        Rational right = integrate_convex(vp(fan_p1(), {2, -1}), {m}).value;
        CHECK(whole == left + right);
    }
    // unit square = standard triangle + its reflection across the diagonal
    for (const Monomial& mono : {Monomial{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
        Rational square = integrate_convex(vp(fan_p1xp1(), {1, 0, 1, 0}), mono).value;
        Rational lower = integrate_convex(vp(fan_triangle(), {0, 0, 1}), mono).value;
        Rational upper = integrate_convex(vp(fan_p2(), {1, 1, -1}), mono).value;
        CHECK(square == lower + upper);
    }
}

TEST_CASE("integrate_virtual agrees with integrate_convex on convex data") {
    std::mt19937 rng(777);
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1(), fan_hirzebruch(1)}) {
        for (int k = 0; k < 5; ++k) {
            VirtualPolytope h = rand_convex(rng, fan);
            Monomial mono(fan->dim, 0);
            mono[k % fan->dim] = k % 3;
            CHECK(integrate_virtual(h, mono) == integrate_convex(h, mono).value);
        }
    }
}

TEST_CASE("integrate_virtual: virtual segment and parity") {
    CHECK(integrate_virtual(vp(fan_p1(), {1, -3}), {0}) == -2);

    std::mt19937 rng(888);
    for (int k = 0; k < 5; ++k) {
        std::vector<Rational> vals = {rand_rational(rng), rand_rational(rng)};
        VirtualPolytope h = make_polytope(fan_p1(), vals);
        VirtualPolytope neg = Rational(-1) * h;
        // volume on a 1-dim fan is homogeneous of odd degree 1
        CHECK(integrate_virtual(neg, {0}) == -integrate_virtual(h, {0}));
    }
}

TEST_CASE("homogeneity of the integral under positive scaling") {
    std::mt19937 rng(555);
    for (const auto& fan : {fan_p1(), fan_p2()}) {
        VirtualPolytope h = rand_convex(rng, fan);
        Monomial mono(fan->dim, 0);
        mono[0] = 2;
        Rational s(3, 2);
        int degree = fan->dim + 2;
        CHECK(integrate_convex(s * h, mono).value ==
              pow_rational(s, degree) * integrate_convex(h, mono).value);
    }
}

TEST_CASE("Minkowski linearity of vertices and polynomiality along lines") {
    std::mt19937 rng(444);
    auto fan = fan_p2();
    VirtualPolytope h1 = rand_convex(rng, fan), h2 = rand_convex(rng, fan);
    auto v1 = vertices(h1), v2 = vertices(h2), vsum = vertices(h1 + h2);
    for (size_t c = 0; c < v1.size(); ++c) {
        for (int j = 0; j < fan->dim; ++j) CHECK(vsum[c][j] == v1[c][j] + v2[c][j]);
    }

    // G(t) = integral over h1 + t*h2 is a polynomial of degree <= dim+|mono|;
    // interpolate from dim+|mono|+1 points and check an extra point
    Monomial mono = {1, 0};
    int deg = fan->dim + 1;
    std::vector<Rational> ts, ys;
    for (int t = 0; t <= deg; ++t) {
        ts.push_back(t);
        ys.push_back(integrate_convex(h1 + Rational(t) * h2, mono).value);
    }
    Rational extra_t = deg + 1;
    Rational predicted = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        Rational term = ys[i];
        for (size_t j = 0; j < ts.size(); ++j) {
            if (i != j) term *= (extra_t - ts[j]) / (ts[i] - ts[j]);
        }
        predicted += term;
    }
    CHECK(predicted == integrate_convex(h1 + extra_t * h2, mono).value);
}

TEST_CASE("integral_polynomial: closed forms") {
    Ring r2 = ray_ring(*fan_p1());
    CHECK(volume_polynomial(fan_p1()) == parse_poly(r2, "a+b"));

    Ring r3 = ray_ring(*fan_p2());
    CHECK(volume_polynomial(fan_p2()) ==
          parse_poly(r3, "1/2*a^2+a*b+a*c+1/2*b^2+b*c+1/2*c^2"));

    Ring r4 = ray_ring(*fan_p1xp1());
    CHECK(volume_polynomial(fan_p1xp1()) == parse_poly(r4, "a*c+a*d+b*c+b*d"));

    // Hirzebruch trapezoid: (a+c)(b+d) - k(b^2-d^2)/2
    for (int k = 0; k <= 3; ++k) {
        Ring rh = ray_ring(*fan_hirzebruch(k));
        Poly expect = (parse_poly(rh, "a+c")) * (parse_poly(rh, "b+d")) -
                      (parse_poly(rh, "b^2-d^2") * Rational(k, 2));
        CHECK(volume_polynomial(fan_hirzebruch(k)) == expect);
    }
}

TEST_CASE("integral_polynomial matches pointwise evaluation on held-out points") {
    std::mt19937 rng(3141);
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1()}) {
        Monomial mono(fan->dim, 0);
        mono[0] = 1;
        Poly F = integral_polynomial(fan, mono);
        std::uniform_int_distribution<int> coord(-5, 5);
        for (int k = 0; k < 10; ++k) {
            std::vector<Rational> pt(fan->num_rays());
            for (auto& x : pt) x = coord(rng);
            CHECK(F.evaluate(pt) == integrate_virtual(make_polytope(fan, pt), mono));
        }
    }
}

TEST_CASE("2-d areas agree with the shoelace oracle") {
    std::mt19937 rng(1618);
    FanPtr hexagon = make_fan(
        2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    for (const auto& fan : {fan_p2(), fan_p1xp1(), fan_hirzebruch(0), fan_hirzebruch(2),
                            fan_triangle(), hexagon}) {
        for (int k = 0; k < 8; ++k) {
            VirtualPolytope h = rand_convex(rng, fan);
            CHECK(integrate_convex(h, {0, 0}).value == shoelace_area(*fan, vertices(h)));
        }
    }
}

TEST_CASE("volume polynomials are translation invariant") {
    // shifting Delta by a lattice vector m changes h_i by <m, e_i> and fixes
    // the volume, so each lattice direction gives a linear annihilator
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1(), fan_hirzebruch(3)}) {
        Poly vol = volume_polynomial(fan);
        Ring ring = vol.ring();
        for (int j = 0; j < fan->dim; ++j) {
            Poly translation(ring);
            for (int i = 0; i < fan->num_rays(); ++i) {
                translation = translation + Poly::variable(ring, i) * Rational(fan->rays[i][j]);
            }
            CHECK(ann_membership(translation, vol));
        }
    }
}

TEST_CASE("toric cohomology Hilbert functions equal fan h-vectors") {
    auto check_fan = [](const FanPtr& fan, const std::vector<int>& expected) {
        GradedQuotient q = toric_cohomology(fan);
        CHECK(q.hilbert == expected);
        auto hv = h_vector(*fan);
        REQUIRE(hv.size() == q.hilbert.size());
        for (size_t i = 0; i < hv.size(); ++i) CHECK(hv[i] == q.hilbert[i]);
    };
    check_fan(fan_p2(), {1, 1, 1});
    check_fan(fan_p1xp1(), {1, 2, 1});
    for (int k = 0; k <= 3; ++k) check_fan(fan_hirzebruch(k), {1, 2, 1});
    check_fan(fan_triangle(), {1, 1, 1});
}

TEST_CASE("hexagon fan: six-ray surface with h-vector (1,4,1)") {
    FanPtr hexagon = make_fan(
        2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    GradedQuotient q = toric_cohomology(hexagon);
    CHECK(q.hilbert == std::vector<int>{1, 4, 1});
    auto hv = h_vector(*hexagon);
    CHECK(std::vector<long long>(q.hilbert.begin(), q.hilbert.end()) == hv);
}

TEST_CASE("blowup of projective 3-space: quadrilateral facets triangulate correctly") {
    // star subdivision at (1,1,1): five rays, six cones; the facets for the
    // coordinate rays are quadrilaterals, so the pulling recursion has to
    // split them
    FanPtr bl = make_fan(3,
                         {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}},
                         {{0, 1, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    GradedQuotient q = toric_cohomology(bl);
    CHECK(q.hilbert == std::vector<int>{1, 2, 2, 1});
    auto hv = h_vector(*bl);
    CHECK(std::vector<long long>(q.hilbert.begin(), q.hilbert.end()) == hv);

    // spot value: h = (1,1,1,0,2) keeps x+y+z <= 2, slicing the side-1
    // corner simplex off the side-3 simplex: 27/6 - 1/6 = 13/3
    auto h = make_polytope(bl, {Rational(1), Rational(1), Rational(1), Rational(0), Rational(2)});
    CHECK(is_convex(h));
    CHECK(integrate_convex(h, {0, 0, 0}).value == Rational(13, 3));
}

TEST_CASE("volume polynomial is positive at the ample point") {
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1(), fan_hirzebruch(2)}) {
        Poly vol = volume_polynomial(fan);
        CHECK(vol.evaluate(find_ample(fan).values) > 0);
    }
}
