#include <doctest.h>

#include "eac/cyclotomic.hpp"
#include "support.hpp"

using namespace eactest;

TEST_CASE("rational literals and canonical form") {
    CHECK(make_rational(6, 4) == make_rational(3, 2));
    CHECK(make_rational(-6, -4) == make_rational(3, 2));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_from_string("7/21") == make_rational(1, 3));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("polynomial arithmetic basics") {
    auto r = xring(2);
    CHECK(px(r, "(x1 + x2) * (x1 - x2)") == px(r, "x1^2 - x2^2"));
    CHECK((px(r, "x1^3 - 2*x2") * Polynomial(r)).is_zero());
    CHECK((px(r, "x1^2 - 1") + px(r, "1 - x1^2")).is_zero());
    CHECK(px(r, "x1^2 - 1").str() == "x1^2 - 1");
    CHECK(px(r, "2/3*x2 - x1").str() == "-x1 + 2/3*x2");
}

TEST_CASE("ring context mismatch is rejected") {
    auto a = xring(2);
    auto b = xring(3);
    CHECK_THROWS_AS(px(a, "x1") + px(b, "x1"), RingMismatchError);
}

TEST_CASE("substitution") {
    auto r = yring(2);
    std::vector<Polynomial> cube{py(r, "y1^3"), py(r, "y2^3")};
    CHECK(py(r, "y1*y2 - 1").substitute(cube) == py(r, "y1^3*y2^3 - 1"));

    std::vector<Polynomial> identity; // empty images = identity
    CHECK(py(r, "y1^2*y2 - 5").substitute(identity) == py(r, "y1^2*y2 - 5"));

    auto r2 = xring(2);
    std::vector<Polynomial> collapse{px(r2, "2*x2")};
    CHECK(px(r2, "x1 + x2").substitute(collapse) == px(r2, "3*x2"));
}

TEST_CASE("polynomial ring laws on random inputs") {
    auto r = xring(3);
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(r, rng, 3, 3);
        Polynomial q = random_poly(r, rng, 3, 3);
        Polynomial s = random_poly(r, rng, 3, 3);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("evaluation is a homomorphism") {
    auto r = xring(2);
    std::vector<Rational> point{make_rational(3, 2), Rational(-2)};
    Polynomial p = px(r, "x1^2*x2 - x2 + 1/2");
    Polynomial q = px(r, "x1 - 4*x2");
    CHECK(p.evaluate(point) * q.evaluate(point) == (p * q).evaluate(point));
    CHECK(p.evaluate(point) + q.evaluate(point) == (p + q).evaluate(point));
}

namespace {

int phi_sieve(int l) {
    int count = 0;
    for (int k = 1; k <= l; ++k) {
        int a = k, b = l;
        while (b) { int t = a % b; a = b; b = t; }
        if (a == 1) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    auto t = Ring::make({std::string("t")});
    Polynomial tt = Polynomial::variable(t, 0);
    CHECK(cyclotomic_polynomial(1, t) == tt - Polynomial::constant(t, 1));
    CHECK(cyclotomic_polynomial(4, t) == tt.pow(2) + Polynomial::constant(t, 1));
    // Forced by exact division of t^6 - 1 by Phi_1 * Phi_2 * Phi_3.
    CHECK(cyclotomic_polynomial(6, t) == tt.pow(2) - tt + Polynomial::constant(t, 1));

    for (int l = 1; l <= 30; ++l) {
        Polynomial prod = Polynomial::constant(t, 1);
        for (int d = 1; d <= l; ++d)
            if (l % d == 0) prod = prod * cyclotomic_polynomial(d, t);
        CHECK(prod == tt.pow(l) - Polynomial::constant(t, 1));
        CHECK(cyclotomic_polynomial(l, t).total_degree() == phi_sieve(l));
    }
}

TEST_CASE("roots of unity have exact order") {
    for (int l = 1; l <= 12; ++l) {
        CycloElement z = CycloElement::zeta(l);
        CHECK(z.pow(l).is_one());
        for (int k = 1; k < l; ++k) CHECK_FALSE(z.pow(k).is_one());
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    CycloElement z4 = CycloElement::zeta(4);
    CHECK(z4 * z4 == CycloElement::from_rational(4, -1));
    CHECK((z4 + z4) * CycloElement::from_rational(4, make_rational(1, 2)) == z4);

    // zeta_2 embeds into level 4 as zeta_4^2 = -1.
    CycloElement z2 = CycloElement::zeta(2);
    CHECK(z2.promote(4) == CycloElement::from_rational(4, -1));
    CHECK_THROWS_AS(z4 + z2, RingMismatchError);
}

TEST_CASE("evaluating polynomials at cyclotomic points") {
    auto r = yring(2);
    Polynomial p = py(r, "y1*y2 - 1");
    std::vector<CycloElement> pt{CycloElement::zeta(6), CycloElement::zeta(6).pow(5)};
    CHECK(evaluate_cyclo(p, pt).is_zero()); // zeta * zeta^5 = zeta^6 = 1
    std::vector<CycloElement> pt2{CycloElement::zeta(6), CycloElement::zeta(6)};
    CHECK_FALSE(evaluate_cyclo(p, pt2).is_zero());
}
