#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "eac/qmatrix.hpp"
#include "support.hpp"

using namespace eactest;

TEST_CASE("buchberger on simple inputs") {
    auto r = xring(1);
    Ideal single = ideal_x(r, {"x1"});
    CHECK(single.basis() == std::vector<Polynomial>{px(r, "x1")});

    Ideal inconsistent = ideal_x(r, {"x1", "x1 + 1"});
    CHECK(inconsistent.basis() == std::vector<Polynomial>{px(r, "1")});
    CHECK_FALSE(inconsistent.is_proper());
}

TEST_CASE("twisted cubic relation appears in the lex basis") {
    auto r = xring(3);
    Ideal cubic = ideal_x(r, {"x1^2 - x2", "x1^3 - x3"});
    auto gb = cubic.basis(MonomialOrder::lex());
    CHECK(std::find(gb.begin(), gb.end(), px(r, "x2^3 - x3^2")) != gb.end());
}

TEST_CASE("reduced basis is deterministic and generator-order independent") {
    auto r = xring(3);
    std::vector<Polynomial> gens{px(r, "x1^2 - x2"), px(r, "x1^3 - x3"),
                                 px(r, "x1*x2 - x3")};
    auto sorted = buchberger(gens, MonomialOrder::grevlex());
    std::reverse(gens.begin(), gens.end());
    CHECK(buchberger(gens, MonomialOrder::grevlex()) == sorted);
    std::swap(gens[0], gens[1]);
    CHECK(buchberger(gens, MonomialOrder::grevlex()) == sorted);
}

TEST_CASE("normal form basics") {
    auto r = xring(3);
    Ideal cubic = ideal_x(r, {"x1^2 - x2", "x1^3 - x3"});
    CHECK(normal_form(px(r, "x1^2 - x2"), cubic).is_zero());
    CHECK(normal_form(px(r, "1"), cubic) == px(r, "1"));
    Ideal square = ideal_x(xring(2), {"x1^2 - x2"});
    CHECK(normal_form(px(xring(2), "x1^2"), square, MonomialOrder::lex()) ==
          px(xring(2), "x2"));
}

TEST_CASE("normal form is idempotent and Q-linear") {
    auto r = xring(2);
    Ideal i = ideal_x(r, {"x1^2 - x2 - 1", "x1*x2 - 3"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(r, rng, 4, 3);
        Polynomial q = random_poly(r, rng, 4, 3);
        Polynomial np = normal_form(p, i);
        CHECK(normal_form(np, i) == np);
        CHECK(normal_form(p + q.scaled(make_rational(2, 3)), i) ==
              np + normal_form(q, i).scaled(make_rational(2, 3)));
    }
}

TEST_CASE("dimension of standard examples") {
    CHECK(dimension(ideal_x(xring(3), {})).dim == 3);
    CHECK(dimension(ideal_x(xring(2), {"x1^2 + x2^2 - 1"})).dim == 1);
    Ideal curve = ideal_x(xring(3), {"x1 - x3^2", "x2 - x3^3"});
    CHECK(dimension(curve).dim == 1);
    CHECK(dimension(curve, MonomialOrder::lex()).dim == 1);
    CHECK(dimension(ideal_x(xring(2), {"1"})).dim == -1);
    for (int n = 1; n <= 6; ++n) CHECK(dimension(ideal_x(xring(n), {})).dim == n);
}

TEST_CASE("dimension witness is a maximum independent set") {
    Ideal cubic = ideal_x(xring(3), {"x1^2 - x2", "x1^3 - x3"});
    DimensionResult d = dimension(cubic);
    CHECK(d.dim == 1);
    CHECK(static_cast<int>(d.witness.size()) == d.dim);
}

TEST_CASE("elimination computes projection closures") {
    auto r2 = xring(2);
    Ideal diag = ideal_x(r2, {"x1 - x2"});
    CHECK(eliminate(diag, {1}).generators().empty());

    Ideal hyper = ideal_x(r2, {"x1*x2 - 1"});
    CHECK(eliminate(hyper, {0}).generators().empty()); // closure fills the puncture

    Ideal cubic = ideal_x(xring(3), {"x2 - x1^2", "x3 - x1^3"});
    Ideal el = eliminate(cubic, {1, 2});
    auto kept = Ring::make({std::string("x2"), std::string("x3")});
    REQUIRE(el.generators().size() == 1);
    CHECK(el.generators()[0] == parse_polynomial("x2^3 - x3^2", kept, 'x'));
}

TEST_CASE("elimination cannot raise dimension") {
    std::vector<Ideal> suite{
        ideal_x(xring(3), {"x1^2 - x2", "x1^3 - x3"}),
        ideal_x(xring(3), {"x1*x2 - x3"}),
        ideal_x(xring(2), {"x1^2 + x2^2 - 1"}),
        ideal_x(xring(3), {}),
    };
    for (const auto& i : suite) {
        int n = i.nvars();
        int full = dimension(i).dim;
        for (int keep_mask = 1; keep_mask < (1 << n); ++keep_mask) {
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (keep_mask & (1 << v)) keep.push_back(v);
            CHECK(dimension(eliminate(i, keep)).dim <= full);
        }
    }
}

TEST_CASE("unit saturation strips hyperplane components") {
    auto r2 = yring(2);
    CHECK_FALSE(saturate_units(ideal_y(r2, {"y1*y2"}), {0, 1}).is_proper());

    Ideal torus_line = ideal_y(yring(1), {"y1 - 1"});
    Ideal sat = saturate_units(torus_line, {0});
    CHECK(sat.basis() == std::vector<Polynomial>{py(yring(1), "y1 - 1")});

    Ideal two = ideal_y(yring(1), {"y1^2 - y1"});
    CHECK(saturate_units(two, {0}).basis() ==
          std::vector<Polynomial>{py(yring(1), "y1 - 1")});
}

TEST_CASE("linear part extraction") {
    auto r = xring(2);
    auto lp1 = linear_part(ideal_x(r, {"x1 - 2*x2"}));
    REQUIRE(lp1.size() == 1);
    CHECK((lp1[0] == px(r, "x1 - 2*x2") || lp1[0] == px(r, "-x1 + 2*x2")));

    CHECK(linear_part(ideal_x(r, {"x1^2 - x2"})).empty());

    auto lp2 = linear_part(ideal_x(r, {"x1^2 - x2", "x1^2 + x2 - 2"}));
    REQUIRE(lp2.size() == 1);
    CHECK((lp2[0] == px(r, "x2 - 1") || lp2[0] == px(r, "-x2 + 1")));
    // Membership double-check of the reported relation.
    CHECK(ideal_x(r, {"x1^2 - x2", "x1^2 + x2 - 2"}).contains(lp2[0]));
}

TEST_CASE("dim is independent of the order on a small suite") {
    std::vector<Ideal> suite{
        ideal_x(xring(2), {"x1^2 - x2"}),
        ideal_x(xring(3), {"x1*x2 - 1", "x3^2 - x1"}),
        ideal_x(xring(3), {"x1 + x2 + x3", "x1*x2 + x2*x3 + x1*x3"}),
        ideal_x(xring(2), {"x1^2 + x2^2 - 1"}),
        ideal_x(xring(4), {"x1*x4 - x2*x3"}),
    };
    for (const auto& i : suite)
        CHECK(dimension(i, MonomialOrder::lex()).dim ==
              dimension(i, MonomialOrder::grevlex()).dim);
}

namespace {

/// Degree-truncated linear-algebra membership oracle: does p lie in the
/// span of { m * g : deg(m * g) <= bound }?
bool macaulay_member(const Polynomial& p, const Ideal& ideal, int bound) {
    const RingPtr& ring = ideal.ring();
    int n = ring->nvars();
    // All monomials of degree <= bound.
    std::vector<Monomial> monos;
    std::vector<int> stack(n, 0);
    std::function<void(int, int)> gen = [&](int var, int left) {
        if (var == n) {
            monos.push_back(Monomial(std::vector<int>(stack.begin(), stack.end())));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            stack[var] = e;
            gen(var + 1, left - e);
        }
        stack[var] = 0;
    };
    gen(0, bound);

    std::map<Monomial, int> col;
    int t = 0;
    for (const auto& m : monos) col[m] = t++;

    QMatrix rows;
    for (const auto& g : ideal.generators()) {
        int gdeg = g.total_degree();
        for (const auto& m : monos) {
            if (m.degree() + gdeg > bound) continue;
            Polynomial prod = g * Polynomial::monomial(ring, m, 1);
            QRow row(t, Rational(0));
            for (const auto& [mm, c] : prod.terms()) row[col[mm]] = c;
            rows.push_back(std::move(row));
        }
    }
    QRow target(t, Rational(0));
    for (const auto& [mm, c] : p.terms()) {
        auto it = col.find(mm);
        if (it == col.end()) return false;
        target[it->second] = c;
    }
    return in_row_span(target, rows);
}

} // namespace

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> nvars(1, 3);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = nvars(rng);
        auto r = xring(n);
        std::vector<Polynomial> gens{random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)};
        Ideal i(r, gens);
        Polynomial p;
        if (trial % 2 == 0) {
            // Planted member: multipliers of degree <= 1.
            p = gens[0] * random_poly(r, rng, 1, 2);
            if (gens.size() > 1) p = p + gens[1] * random_poly(r, rng, 1, 2);
        } else {
            p = random_poly(r, rng, 2, 3);
        }
        if (p.is_zero()) continue;
        int bound = p.total_degree() + 2;
        bool nf_zero = normal_form(p, i).is_zero();
        bool oracle = macaulay_member(p, i, bound);
        if (nf_zero != oracle) {
            // The truncated oracle is incomplete in principle; it must
            // never claim membership that normal forms refute.
            CHECK(nf_zero);
            CHECK_FALSE(oracle);
            continue;
        }
        CHECK(nf_zero == oracle);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("step limit reports instead of looping") {
    long saved = reduction_step_limit();
    set_reduction_step_limit(3);
    auto r = xring(3);
    std::vector<Polynomial> gens{px(r, "x1^2*x2 - x3^2"), px(r, "x2^3 - x1*x3"),
                                 px(r, "x3^3 - x1*x2^2")};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex()), ResourceLimitError);
    set_reduction_step_limit(saved);
}
