#include <doctest.h>

#include "eac/images.hpp"
#include "eac/pairs.hpp"
#include "support.hpp"

using namespace eactest;

namespace {

VarietyPair pair2(const std::vector<std::string>& vx, const std::vector<std::string>& wy,
                  int n = 2) {
    return VarietyPair(ideal_x(xring(n), vx), ideal_y(yring(n), wy), true, true);
}

} // namespace

TEST_CASE("pair invariants") {
    CHECK_THROWS_AS(pair2({"1"}, {}), PreconditionError);
    CHECK_THROWS_AS(pair2({}, {"y1*y2"}), PreconditionError); // misses the torus
    CHECK_NOTHROW(pair2({"x1", "x2"}, {"y2 - y1"}));
}

TEST_CASE("additive freeness") {
    CHECK(additive_free(pair2({}, {})).free);

    auto dep = additive_free(pair2({"x1 + x2 - 1"}, {}));
    CHECK_FALSE(dep.free);
    REQUIRE(dep.witness.has_value());
    CHECK(dep.witness->m == std::vector<Integer>{1, 1});
    CHECK(dep.witness->c == 1);

    CHECK(additive_free(pair2({"x2 - x1^2"}, {})).free);
}

TEST_CASE("multiplicative freeness") {
    auto dep = multiplicative_free(pair2({}, {"y1*y2 - 1"}), 3);
    CHECK_FALSE(dep.free);
    REQUIRE(dep.witness.has_value());
    CHECK(dep.witness->m == std::vector<Integer>{1, 1});
    CHECK(dep.witness->c == 1);

    CHECK(multiplicative_free(pair2({}, {}), 4).free);
    CHECK(multiplicative_free(pair2({}, {"y2 - y1^2 - 1"}), 3).free);

    // A proportionality with a non-unit scalar: y1 = 5*y2 on W.
    auto scaled = multiplicative_free(pair2({}, {"y1 - 5*y2"}), 2);
    CHECK_FALSE(scaled.free);
    CHECK(scaled.witness->c == 5);
}

TEST_CASE("normality verdicts match hand-computed cases") {
    // Full pair in dimension 1.
    VarietyPair full1(ideal_x(xring(1), {}), ideal_y(yring(1), {}), true, true);
    CHECK(normal_check(full1, 3).normal);

    // A point times a curve: rank 1 already fails via x1 - x2 vs y1/y2.
    auto bad = normal_check(pair2({"x1", "x2"}, {"y2 - y1"}), 3);
    CHECK_FALSE(bad.normal);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->dim_x + bad.witness->dim_y < bad.witness->k);

    // Hyperplane times the full torus.
    CHECK(normal_check(pair2({"x1 + x2 - 1"}, {}), 3).normal);

    // Matching diagonal constraints on both sides fail at the (1,-1) line.
    auto diag = normal_check(pair2({"x1 - x2"}, {"y1 - y2"}), 3);
    CHECK_FALSE(diag.normal);
    CHECK(diag.witness->lattice.basis == IntMatrix::from_rows({{1, -1}}));

    // A coordinate flat pinned on both sides fails at the axis itself.
    VarietyPair flat(ideal_x(xring(3), {"x3"}), ideal_y(yring(3), {"y3 - 1"}), true, true);
    auto fv = normal_check(flat, 2);
    CHECK_FALSE(fv.normal);
    CHECK(fv.witness->k == 1);
    CHECK(fv.witness->lattice.coordinate_axes);
}

TEST_CASE("normality verdicts are monotone in the height") {
    std::vector<VarietyPair> suite{
        pair2({}, {}),
        pair2({"x1 + x2 - 1"}, {}),
        pair2({"x2 - x1^2"}, {"y2 - y1^2 - 1"}),
        pair2({"x1 - x2"}, {"y1 - y2"}),
    };
    for (const auto& p : suite) {
        bool at3 = normal_check(p, 3).normal;
        if (at3) {
            CHECK(normal_check(p, 2).normal);
            CHECK(normal_check(p, 1).normal);
        }
    }
}

TEST_CASE("normality is stable under unimodular coordinate changes") {
    IntMatrix u = IntMatrix::from_rows({{1, 1}, {0, 1}});
    REQUIRE(u.det() == 1);
    std::vector<VarietyPair> suite{
        pair2({"x1 + x2 - 1"}, {}),
        pair2({"x1 - x2"}, {"y1 - y2"}),
        pair2({"x1", "x2"}, {"y2 - y1"}),
    };
    for (const auto& p : suite) {
        VarietyPair moved(lin_image(p.variety_x(), u, "x"),
                          mono_image(p.variety_y(), u, "y"), true, true);
        int scaled_height = 3 * 2 * static_cast<int>(u.height().get_si());
        CHECK(normal_check(p, 3).normal == normal_check(moved, scaled_height).normal);
    }
}

TEST_CASE("axiom instance reports") {
    auto good = axiom_instance(pair2({"x1 + x2 - 1"}, {}), 3);
    CHECK_FALSE(good.qualifies); // additive dependency
    auto better = axiom_instance(pair2({"x2 - x1^2"}, {}), 3);
    CHECK(better.qualifies);
    auto multdep = axiom_instance(pair2({}, {"y1*y2 - 1"}), 3);
    CHECK_FALSE(multdep.qualifies);
    auto notnormal = axiom_instance(pair2({"x1", "x2"}, {"y2 - y1"}), 3);
    CHECK_FALSE(notnormal.qualifies);

    VarietyPair unflagged(ideal_x(xring(2), {}), ideal_y(yring(2), {}), false, true);
    CHECK_FALSE(axiom_instance(unflagged, 3).qualifies);
}

TEST_CASE("reduce removes a hypersurface with a fresh inverse power") {
    VarietyPair full = pair2({}, {});
    auto r = reduce(full, ideal_x(xring(2), {"x1"}), std::nullopt, 3, 5);
    REQUIRE(r.ok);
    CHECK(r.k == 1);
    CHECK(r.added_x == 1);
    CHECK(r.added_y == 0);
    REQUIRE(r.pair.has_value());
    CHECK(r.pair->n() == 3);
    CHECK(r.additive.free);
    CHECK(r.multiplicative.free);

    // Sample round trip: points of V with x1 != 0 extend; x1 = 0 do not.
    const auto& gens = r.pair->variety_x().generators();
    REQUIRE(gens.size() == 1);
    auto at = [&](const Rational& a, const Rational& b, const Rational& c) {
        return gens[0].evaluate({a, b, c});
    };
    CHECK(at(2, 7, make_rational(1, 2)) == 0);  // x3 = 1/x1
    CHECK(at(make_rational(-3, 4), 0, make_rational(-4, 3)) == 0);
    CHECK(at(0, 1, 5) != 0); // no extension over x1 = 0
}

TEST_CASE("reduce with removals on both sides and multi-generator removal") {
    VarietyPair full = pair2({}, {});
    auto r = reduce(full, ideal_x(xring(2), {"x1", "x2"}),
                    ideal_y(yring(2), {"y1 - 1"}), 3, 5);
    REQUIRE(r.ok);
    CHECK(r.added_x == 2); // auxiliary coordinate + inverse
    CHECK(r.added_y == 1);
    CHECK(r.pair->n() == 5);
    CHECK(r.additive.free);
    CHECK(r.multiplicative.free);

    // The x-side identity kills exactly the common zero locus x1 = x2 = 0:
    // (x1 + x2*t) * s = 1 is solvable iff some coordinate is nonzero.
    const auto& gens = r.pair->variety_x().generators();
    REQUIRE(gens.size() == 1);
    // x = (1, 0): t free (use 0), s = 1.
    CHECK(gens[0].evaluate({1, 0, 0, 1, 7}) == 0);
    // x = (0, 2): t = 1, s = 1/2.
    CHECK(gens[0].evaluate({0, 2, 1, make_rational(1, 2), 7}) == 0);

    // Removing with polynomials already in the variety is an error.
    CHECK_THROWS_AS(reduce(pair2({"x1 - x2"}, {}), ideal_x(xring(2), {"x1 - x2"}),
                           std::nullopt, 3, 5),
                    PreconditionError);
    CHECK_THROWS_AS(reduce(full, std::nullopt, std::nullopt, 3, 5), PreconditionError);
}

TEST_CASE("reduce round-trips sample points on curated punctured pairs") {
    struct Case {
        VarietyPair pair;
        std::vector<std::string> vprime;
        std::vector<std::vector<Rational>> samples; // rational points of V
    };
    Rational half = make_rational(1, 2);
    std::vector<Case> cases;
    cases.push_back({pair2({}, {}), {"x1"}, {{1, 2}, {3, 4}, {0, 5}, {make_rational(1, 3), 1}}});
    cases.push_back({pair2({"x2 - x1^2"}, {}), {"x1 - 1"},
                     {{1, 1}, {2, 4}, {3, 9}, {half, make_rational(1, 4)}}});
    cases.push_back({pair2({"x2 - x1^3"}, {}), {"x1 - 2"},
                     {{0, 0}, {1, 1}, {2, 8}, {half, make_rational(1, 8)}}});
    cases.push_back({pair2({}, {}), {"x2"}, {{4, 1}, {0, 0}, {-1, half}}});
    cases.push_back({pair2({}, {}), {"x1 - x2"}, {{1, 2}, {2, 2}, {5, -5}}});
    cases.push_back({pair2({}, {}), {"x1 + x2 - 1"}, {{0, 1}, {2, 3}, {half, half}}});
    cases.push_back({pair2({"x2 - x1^2"}, {}), {"x2 - 4"}, {{2, 4}, {1, 1}, {-2, 4}, {0, 0}}});
    cases.push_back({pair2({"x2 - x1^3"}, {}), {"x1"}, {{0, 0}, {1, 1}, {-1, -1}, {2, 8}}});
    cases.push_back({pair2({}, {"y2 - y1^2 - 1"}), {"x1 - 3"}, {{3, 0}, {1, 7}, {0, 0}}});
    cases.push_back({pair2({}, {}), {"x1^2 - x2"}, {{1, 1}, {1, 0}, {2, 4}, {3, 5}}});
    REQUIRE(cases.size() == 10);
    for (auto& c : cases) {
        auto r = reduce(c.pair, ideal_x(xring(2), c.vprime), std::nullopt, 3, 5);
        REQUIRE(r.ok);
        REQUIRE(r.k == 1);
        Polynomial f = r.fs[0];
        for (const auto& s : c.samples) {
            // Samples must lie on V in the first place.
            for (const auto& g : c.pair.variety_x().generators())
                REQUIRE(g.evaluate(s) == 0);
            Rational fv = f.evaluate(s);
            if (fv == 0) continue; // the removed part: no extension expected
            // Extension: the fresh coordinate is 1/f(sample).
            std::vector<Rational> ext = s;
            ext.push_back(1 / fv);
            for (const auto& g : r.pair->variety_x().generators())
                CHECK(g.evaluate(ext) == 0);
            // Projection direction: the extended point projects back into
            // V with f != 0 by construction.
            for (const auto& g : c.pair.variety_x().generators())
                CHECK(g.evaluate(s) == 0);
        }
    }
}

TEST_CASE("cut from the full pair, twice, reaching zero") {
    VarietyPair full = pair2({}, {});
    auto c1 = cut(full, 7, 3);
    REQUIRE(c1.report.ok);
    CHECK(c1.report.side == 'V');
    CHECK(c1.report.dim_x_after == 1);
    CHECK(c1.report.dim_y_after == 2);
    CHECK(c1.report.d_after == 1);
    CHECK(c1.report.additive.free);
    CHECK(c1.report.normality.normal);

    auto c2 = cut(*c1.pair, 8, 3);
    REQUIRE(c2.report.ok);
    CHECK(c2.report.side == 'W');
    CHECK(c2.report.dim_x_after == 1);
    CHECK(c2.report.dim_y_after == 1);
    CHECK(c2.report.d_after == 0);
    CHECK(c2.report.multiplicative.free);
    CHECK(c2.report.normality.normal);

    // Third cut: d = 0 violates the precondition.
    CHECK_THROWS_AS(cut(*c2.pair, 9, 3), PreconditionError);
}

TEST_CASE("cut preconditions") {
    // d = 0 from the start.
    CHECK_THROWS_AS(cut(pair2({"x2 - x1^2"}, {"y2 - y1^2 - 1"}), 1, 3), PreconditionError);
    // Dependent pairs are rejected before any draw.
    CHECK_THROWS_AS(cut(pair2({"x1 + x2 - 1"}, {}), 1, 3), PreconditionError);
    CHECK_THROWS_AS(cut(pair2({}, {"y1*y2 - 1"}), 1, 3), PreconditionError);
}

TEST_CASE("cut determinism per seed") {
    VarietyPair full = pair2({}, {});
    auto a = cut(full, 1234, 3);
    auto b = cut(full, 1234, 3);
    REQUIRE(a.report.ok);
    CHECK(a.report.coefficients == b.report.coefficients);
    CHECK(a.pair->variety_x().generators() == b.pair->variety_x().generators());
    auto c = cut(full, 1235, 3);
    CHECK(a.report.coefficients != c.report.coefficients);
}

TEST_CASE("associated preimages") {
    auto p = pair2({}, {"y1 - 1"}, 1);
    CHECK(associated_preimage(p, 1).generators() == p.variety_y().generators());
    CHECK(associated_preimage(p, 2).generators() ==
          std::vector<Polynomial>{py(yring(1), "y1^2 - 1")});

    auto q = pair2({}, {"y2 - y1^2"});
    CHECK(associated_preimage(q, 3).generators() ==
          std::vector<Polynomial>{py(yring(2), "y2^3 - y1^6")});
}

TEST_CASE("preimage towers cohere under powering") {
    std::vector<VarietyPair> suite{
        pair2({}, {"y1 - 1"}, 1),
        pair2({}, {"y2 - y1^2"}),
        pair2({}, {"y1*y2 - 1"}),
        pair2({}, {"y2 - y1^2 - 1"}),
    };
    for (const auto& p : suite) {
        int n = p.n();
        for (int l = 1; l <= 4; ++l)
            for (int m = 1; m <= 4; ++m) {
                Ideal deep = associated_preimage(p, l * m);
                Ideal shallow = associated_preimage(p, l);
                const RingPtr& ring = shallow.ring();
                std::vector<Polynomial> powers;
                for (int i = 0; i < n; ++i)
                    powers.push_back(Polynomial::variable(ring, i, m));
                for (const auto& g : shallow.generators())
                    CHECK(deep.contains(g.substitute(powers)));
            }
    }
}

TEST_CASE("unity action fixes preimage membership") {
    auto p = pair2({}, {"y1 - 1"}, 1);
    Ideal pre = associated_preimage(p, 2);
    std::vector<CycloElement> pt{CycloElement::one(2)};
    std::vector<CycloElement> xi{CycloElement::zeta(2)};
    auto moved = unity_action(pt, xi, 2);
    CHECK(moved[0] == CycloElement::from_rational(2, -1));
    CHECK(vanishes_at(pre, moved));

    // Identity twist.
    auto same = unity_action(pt, {CycloElement::one(2)}, 2);
    CHECK(same[0] == pt[0]);

    // Level-4 action: zeta_4 * zeta_4 = -1 stays inside y^4 = 1.
    auto p4 = pair2({}, {"y1 - 1"}, 1);
    Ideal pre4 = associated_preimage(p4, 4);
    auto moved4 = unity_action({CycloElement::zeta(4)}, {CycloElement::zeta(4)}, 4);
    CHECK(moved4[0] == CycloElement::from_rational(4, -1));
    CHECK(vanishes_at(pre4, moved4));

    // Rejecting non-roots.
    CHECK_THROWS_AS(unity_action(pt, {CycloElement::from_rational(2, 2)}, 2),
                    PreconditionError);
}

TEST_CASE("unity-action closure across all twists at small levels") {
    // Full preimages are stable under every l-th root twist: each
    // generator only sees l-th powers of the coordinates.
    auto suite = std::vector<VarietyPair>{
        pair2({}, {"y1 - 1", "y2 - 1"}),
        pair2({}, {"y2 - y1^2"}),
        pair2({}, {"y1*y2 - 1"}),
    };
    for (const auto& p : suite) {
        for (int l = 1; l <= 6; ++l) {
            Ideal pre = associated_preimage(p, l);
            CycloElement z = CycloElement::zeta(l);
            // Rational torus points of W lifted to unity multiples; plus
            // all root pairs when W pins both coordinates.
            std::vector<std::vector<CycloElement>> points;
            for (int a = 0; a < l; ++a)
                for (int b = 0; b < l; ++b) {
                    std::vector<CycloElement> pt{z.pow(a), z.pow(b)};
                    if (vanishes_at(pre, pt)) points.push_back(pt);
                }
            CHECK_FALSE(points.empty());
            for (const auto& pt : points)
                for (int a = 0; a < l; ++a)
                    for (int b = 0; b < l; ++b) {
                        auto moved = unity_action(pt, {z.pow(a), z.pow(b)}, l);
                        CHECK(vanishes_at(pre, moved));
                    }
        }
    }
}

TEST_CASE("adim bound on qualifying pairs") {
    auto full = pair2({}, {});
    auto r = adim_bound(full, 3);
    CHECK(r.bound == 2);
    CHECK(r.notes.size() == 2);

    auto parabola = adim_bound(pair2({"x2 - x1^2"}, {}), 3);
    CHECK(parabola.bound == 1);

    CHECK_THROWS_AS(adim_bound(pair2({"x1", "x2"}, {"y2 - y1"}), 3), PreconditionError);
}
