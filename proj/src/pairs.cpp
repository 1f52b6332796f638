#include "eac/pairs.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eac/images.hpp"
#include "eac/qmatrix.hpp"

namespace eac {

namespace {

std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// Affine-linear polynomial as the vector (c0, c1, ..., cn).
QRow vectorize_linear(const Polynomial& p, int n) {
    QRow v(n + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        int deg = m.degree();
        if (deg == 0) {
            v[0] = c;
            continue;
        }
        if (deg != 1)
            throw PreconditionError("expected an affine-linear polynomial");
        for (int j = 0; j < n; ++j)
            if (m.exponents[j] == 1) v[j + 1] = c;
    }
    return v;
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
    std::string name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

} // namespace

VarietyPair::VarietyPair(Ideal variety_x, Ideal variety_y,
                         bool assume_x_irreducible, bool assume_y_irreducible)
    : vx_(std::move(variety_x)), vy_(std::move(variety_y)),
      x_irred_(assume_x_irreducible), y_irred_(assume_y_irreducible) {
    int n = vx_.nvars();
    if (n < 1) throw PreconditionError("variety pair needs ambient dimension >= 1");
    if (vy_.nvars() != n)
        throw PreconditionError("variety pair: the two sides disagree on the ambient dimension");
    if (!vx_.is_proper())
        throw PreconditionError("variety pair: the point-side ideal is improper (empty variety)");
    if (!vy_.is_proper())
        throw PreconditionError("variety pair: the image-side ideal is improper (empty variety)");
    vy_sat_ = saturate_units(vy_, all_indices(n));
    if (!vy_sat_.is_proper())
        throw PreconditionError("variety pair: the image variety misses the torus");
}

int VarietyPair::n() const { return vx_.nvars(); }
int VarietyPair::dim_x() const { return dimension(vx_).dim; }
int VarietyPair::dim_y() const { return dimension(vy_).dim; }

VarietyPair VarietyPair::with_cut_x(Polynomial hyperplane) const {
    std::vector<Polynomial> gens = vx_.generators();
    gens.push_back(hyperplane);
    VarietyPair p(Ideal(vx_.ring(), std::move(gens)), vy_, x_irred_, y_irred_);
    p.cut_params_x_ = cut_params_x_;
    p.cut_params_x_.push_back(std::move(hyperplane));
    p.cut_params_y_ = cut_params_y_;
    return p;
}

VarietyPair VarietyPair::with_cut_y(Polynomial hyperplane) const {
    std::vector<Polynomial> gens = vy_.generators();
    gens.push_back(hyperplane);
    VarietyPair p(vx_, Ideal(vy_.ring(), std::move(gens)), x_irred_, y_irred_);
    p.cut_params_x_ = cut_params_x_;
    p.cut_params_y_ = cut_params_y_;
    p.cut_params_y_.push_back(std::move(hyperplane));
    return p;
}

std::string DependencyWitness::str(const RingPtr& ring, bool multiplicative) const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (multiplicative) {
            if (!first) out << "*";
            out << ring->vars[i];
            if (m[i] != 1) out << "^" << to_string(m[i]);
        } else {
            Integer a = m[i];
            if (first) {
                if (a < 0) { out << "-"; a = -a; }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1) out << to_string(a) << "*";
            out << ring->vars[i];
        }
        first = false;
    }
    if (first) out << "1";
    out << " = " << to_string(c);
    return out.str();
}

AdditiveVerdict additive_free(const VarietyPair& pair) {
    int n = pair.n();
    std::vector<Polynomial> lp = linear_part(pair.variety_x());

    QMatrix params;
    for (const auto& p : pair.cut_params_x())
        params.push_back(vectorize_linear(p, n));

    AdditiveVerdict verdict;
    for (const auto& p : lp) {
        QRow v = vectorize_linear(p, n);
        if (!params.empty() && in_row_span(v, params)) continue; // parameter relation
        bool has_vars = false;
        for (int j = 1; j <= n; ++j)
            if (v[j] != 0) has_vars = true;
        if (!has_vars) continue; // constant member only arises from improper ideals
        // Scale (c1..cn, c0) to primitive integers; relation m.x = -c0.
        QRow w(v.begin() + 1, v.end());
        w.push_back(v[0]);
        std::vector<Integer> prim = primitive_integer(w);
        DependencyWitness witness;
        witness.m.assign(prim.begin(), prim.end() - 1);
        witness.c = -Rational(prim.back());
        verdict.free = false;
        verdict.witness = std::move(witness);
        return verdict;
    }
    return verdict;
}

MultiplicativeVerdict multiplicative_free(const VarietyPair& pair, int height) {
    if (height < 1) throw PreconditionError("height bound must be >= 1");
    int n = pair.n();
    const Ideal& w = pair.variety_y();
    const RingPtr& ring = w.ring();

    MultiplicativeVerdict verdict;
    verdict.height = height;
    for (const auto& m : primitive_vectors(n, height)) {
        Monomial pos = Monomial::one(n), neg = Monomial::one(n);
        for (int j = 0; j < n; ++j) {
            long e = m[j].get_si();
            if (e > 0) pos.exponents[j] = static_cast<int>(e);
            if (e < 0) neg.exponents[j] = static_cast<int>(-e);
        }
        Polynomial nf_pos = normal_form(Polynomial::monomial(ring, pos, 1), w);
        Polynomial nf_neg = normal_form(Polynomial::monomial(ring, neg, 1), w);
        if (nf_pos.is_zero() || nf_neg.is_zero()) continue; // no unit scalar relates them
        // Dependent iff nf_pos = c * nf_neg for a scalar c.
        const auto& [m0, c0] = *nf_pos.terms().begin();
        const auto& [m1, c1] = *nf_neg.terms().begin();
        if (!(m0 == m1)) continue;
        Rational c = c0 / c1;
        if (nf_pos == nf_neg.scaled(c)) {
            verdict.free = false;
            DependencyWitness witness;
            witness.m = m;
            witness.c = c;
            verdict.witness = std::move(witness);
            return verdict;
        }
    }
    return verdict;
}

NormalityVerdict normal_check(const VarietyPair& pair, int height) {
    if (height < 1) throw PreconditionError("height bound must be >= 1");
    int n = pair.n();
    NormalityVerdict verdict;
    verdict.height = height;
    for (int k = 1; k <= n; ++k) {
        for (const auto& sub : enumerate_sublattices(n, k, height)) {
            int dx = dimension(lin_image(pair.variety_x(), sub.basis)).dim;
            int dy = dimension(
                         mono_image(pair.variety_y_torus_closure(), sub.basis, "b", true))
                         .dim;
            if (dx + dy < k) {
                verdict.normal = false;
                verdict.witness = NormalityWitness{sub, dx, dy, k};
                return verdict;
            }
        }
    }
    return verdict;
}

AxiomReport axiom_instance(const VarietyPair& pair, int height) {
    AxiomReport report;
    report.additive = additive_free(pair);
    report.multiplicative = multiplicative_free(pair, height);
    report.normality = normal_check(pair, height);
    report.x_irreducible_assumed = pair.x_irreducible_assumed();
    report.y_irreducible_assumed = pair.y_irreducible_assumed();
    report.qualifies = report.additive.free && report.multiplicative.free &&
                       report.normality.normal && report.x_irreducible_assumed &&
                       report.y_irreducible_assumed;
    return report;
}

namespace {

/// Generators of the removal ideal that do not already vanish on the
/// variety; empty means the removal covers everything (nothing is left).
std::vector<Polynomial> effective_removals(const Ideal& variety, const Ideal& removal) {
    std::vector<Polynomial> kept;
    for (const auto& g : removal.generators())
        if (!normal_form(g, variety).is_zero()) kept.push_back(g);
    return kept;
}

} // namespace

ReduceResult reduce(const VarietyPair& pair,
                    const std::optional<Ideal>& x_remove,
                    const std::optional<Ideal>& y_remove,
                    int height, int k_cap) {
    if (k_cap < 1) throw PreconditionError("k-cap must be >= 1");
    if (!x_remove && !y_remove)
        throw PreconditionError("reduce: nothing to remove on either side");
    int n = pair.n();

    ReduceResult result;
    if (x_remove) {
        if (!(*x_remove->ring() == *pair.variety_x().ring()))
            throw RingMismatchError("reduce: x-side removal in the wrong ring");
        result.fs = effective_removals(pair.variety_x(), *x_remove);
        if (result.fs.empty())
            throw PreconditionError("reduce: x-side removal leaves nothing (V' contains V)");
    }
    if (y_remove) {
        if (!(*y_remove->ring() == *pair.variety_y().ring()))
            throw RingMismatchError("reduce: y-side removal in the wrong ring");
        result.gs = effective_removals(pair.variety_y(), *y_remove);
        if (result.gs.empty())
            throw PreconditionError("reduce: y-side removal leaves nothing (W' contains W)");
    }

    result.added_x = result.fs.empty() ? 0 : (result.fs.size() == 1 ? 1 : 2);
    result.added_y = result.gs.empty() ? 0 : (result.gs.size() == 1 ? 1 : 2);
    int total = n + result.added_x + result.added_y;

    std::vector<std::string> x_names = pair.variety_x().ring()->vars;
    std::vector<std::string> y_names = pair.variety_y().ring()->vars;
    for (int i = n; i < total; ++i) {
        x_names.push_back(fresh_name(x_names, "x" + std::to_string(i + 1)));
        y_names.push_back(fresh_name(y_names, "y" + std::to_string(i + 1)));
    }
    RingPtr rx = Ring::make(x_names), ry = Ring::make(y_names);

    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;

    // x-side: q_V = f (single) or sum_i f_i t^(i-1) with t the first fresh
    // coordinate; the identity is q_V * s^k = 1.
    Polynomial qv(rx);
    int sx = -1;
    if (result.added_x > 0) {
        sx = n + result.added_x - 1;
        if (result.fs.size() == 1) {
            qv = result.fs[0].remap(rx, embed);
        } else {
            for (size_t i = 0; i < result.fs.size(); ++i)
                qv = qv + result.fs[i].remap(rx, embed) *
                              Polynomial::variable(rx, n, static_cast<int>(i));
        }
    }

    Polynomial qw(ry);
    int sy = -1;
    if (result.added_y > 0) {
        sy = total - 1;
        if (result.gs.size() == 1) {
            qw = result.gs[0].remap(ry, embed);
        } else {
            for (size_t i = 0; i < result.gs.size(); ++i)
                qw = qw + result.gs[i].remap(ry, embed) *
                              Polynomial::variable(ry, n + result.added_x,
                                                   static_cast<int>(i));
        }
    }

    std::vector<Polynomial> base_y;
    for (const auto& g : pair.variety_y().generators()) base_y.push_back(g.remap(ry, embed));
    if (result.added_y > 0)
        base_y.push_back(qw * Polynomial::variable(ry, sy) - Polynomial::constant(ry, 1));

    for (int k = 1; k <= k_cap; ++k) {
        std::vector<Polynomial> gens_x;
        for (const auto& g : pair.variety_x().generators()) gens_x.push_back(g.remap(rx, embed));
        if (result.added_x > 0)
            gens_x.push_back(qv * Polynomial::variable(rx, sx, k) -
                             Polynomial::constant(rx, 1));

        std::optional<VarietyPair> candidate;
        try {
            candidate.emplace(Ideal(rx, std::move(gens_x)), Ideal(ry, base_y),
                              pair.x_irreducible_assumed(), pair.y_irreducible_assumed());
        } catch (const PreconditionError& e) {
            result.obstruction = std::string("output pair is degenerate: ") + e.what();
            return result;
        }

        result.k = k;
        result.pair = candidate;
        if (k == 1) {
            result.multiplicative = multiplicative_free(*candidate, height);
            if (!result.multiplicative.free) {
                result.obstruction =
                    "output is multiplicatively dependent: " +
                    result.multiplicative.witness->str(ry, true);
                return result;
            }
        }
        result.additive = additive_free(*candidate);
        if (result.additive.free) {
            result.ok = true;
            return result;
        }
        // Escalate the root exponent and retry.
    }
    result.obstruction = "additive dependency persists up to the exponent cap: " +
                         result.additive.witness->str(rx, false);
    return result;
}

CutResult cut(const VarietyPair& pair, std::uint64_t seed, int height) {
    int n = pair.n();

    AxiomReport pre = axiom_instance(pair, height);
    if (!pre.additive.free)
        throw PreconditionError("cut: the pair is additively dependent");
    if (!pre.multiplicative.free)
        throw PreconditionError("cut: the pair is multiplicatively dependent");
    if (!pre.normality.normal)
        throw PreconditionError("cut: the pair is not normal at the session bound");

    CutResult out;
    CutReport& rep = out.report;
    rep.dim_x_before = pair.dim_x();
    rep.dim_y_before = pair.dim_y();
    rep.d_before = rep.dim_x_before + rep.dim_y_before - n;
    if (rep.d_before <= 0)
        throw PreconditionError("cut: needs dim V + dim W - n > 0");

    bool cut_x;
    if (rep.dim_x_before > 1) {
        cut_x = true;
    } else if (rep.dim_x_before == 1 && rep.dim_y_before == n) {
        // With d > 0 exhausted on the image side, the hyperplane section
        // moves there: y_1 + ... + y_n = c.
        cut_x = false;
    } else {
        throw PreconditionError("cut: needs dim V > 1, or dim V = 1 with the full torus");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> magnitude(1, 1000000);
    std::uniform_int_distribution<int> coin(0, 1);
    auto draw = [&]() {
        long num = magnitude(rng);
        long den = magnitude(rng);
        return make_rational(coin(rng) ? num : -num, den);
    };

    std::optional<VarietyPair> candidate;
    if (cut_x) {
        rep.side = 'V';
        const RingPtr& ring = pair.variety_x().ring();
        Polynomial hyper = Polynomial::constant(ring, -1);
        for (int i = 0; i < n; ++i) {
            Rational c = draw();
            rep.coefficients.push_back(c);
            hyper = hyper + Polynomial::variable(ring, i).scaled(c);
        }
        try {
            candidate = pair.with_cut_x(hyper);
        } catch (const PreconditionError&) {
            rep.advice = "degenerate draw: the section is empty; retry with a new seed";
            return out;
        }
    } else {
        rep.side = 'W';
        const RingPtr& ring = pair.variety_y().ring();
        Rational c = draw();
        rep.coefficients.push_back(c);
        Polynomial hyper = Polynomial::constant(ring, -c);
        for (int i = 0; i < n; ++i)
            hyper = hyper + Polynomial::variable(ring, i);
        try {
            candidate = pair.with_cut_y(hyper);
        } catch (const PreconditionError&) {
            rep.advice = "degenerate draw: the section misses the torus; retry with a new seed";
            return out;
        }
    }

    out.pair = candidate;
    rep.dim_x_after = candidate->dim_x();
    rep.dim_y_after = candidate->dim_y();
    rep.d_after = rep.dim_x_after + rep.dim_y_after - n;

    int expected_x = rep.dim_x_before - (cut_x ? 1 : 0);
    int expected_y = rep.dim_y_before - (cut_x ? 0 : 1);
    if (rep.dim_x_after != expected_x || rep.dim_y_after != expected_y) {
        rep.advice = "degenerate draw: the dimension did not drop by exactly one; retry with a new seed";
        return out;
    }

    rep.additive = additive_free(*candidate);
    rep.multiplicative = multiplicative_free(*candidate, height);
    rep.normality = normal_check(*candidate, height);
    if (!rep.additive.free || !rep.multiplicative.free || !rep.normality.normal) {
        rep.advice = "non-generic draw: a freeness or normality check failed; retry with a new seed";
        return out;
    }
    rep.ok = true;
    return out;
}

Ideal associated_preimage(const VarietyPair& pair, int l) {
    if (l < 1) throw PreconditionError("root level must be >= 1");
    const Ideal& w = pair.variety_y();
    const RingPtr& ring = w.ring();
    int n = pair.n();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring, i, l));
    std::vector<Polynomial> gens;
    for (const auto& g : w.generators()) gens.push_back(g.substitute(images));
    return Ideal(ring, std::move(gens));
}

std::vector<CycloElement> unity_action(const std::vector<CycloElement>& point,
                                       const std::vector<CycloElement>& xi, int level) {
    if (point.size() != xi.size())
        throw PreconditionError("unity action: point and twist have different lengths");
    std::vector<CycloElement> out;
    out.reserve(point.size());
    for (size_t i = 0; i < point.size(); ++i) {
        CycloElement x = xi[i].level() == level ? xi[i] : xi[i].promote(level);
        if (!x.pow(level).is_one())
            throw PreconditionError("unity action: twist coordinate " + std::to_string(i + 1) +
                                    " is not a root of unity of the stated level");
        CycloElement p = point[i].level() == level ? point[i] : point[i].promote(level);
        out.push_back(p * x);
    }
    return out;
}

bool vanishes_at(const Ideal& ideal, const std::vector<CycloElement>& point) {
    for (const auto& g : ideal.generators())
        if (!evaluate_cyclo(g, point).is_zero()) return false;
    return true;
}

AdimReport adim_bound(const VarietyPair& pair, int height) {
    AxiomReport rep = axiom_instance(pair, height);
    if (!rep.qualifies) {
        std::string why;
        if (!rep.additive.free) why = "additively dependent";
        else if (!rep.multiplicative.free) why = "multiplicatively dependent";
        else if (!rep.normality.normal) why = "not normal at the bound";
        else why = "irreducibility not asserted for both varieties";
        throw PreconditionError("adim bound needs a qualifying pair: " + why);
    }
    AdimReport out;
    out.dim_x = pair.dim_x();
    out.dim_y = pair.dim_y();
    out.bound = out.dim_x + out.dim_y - pair.n();
    if (out.dim_y == pair.n())
        out.notes.push_back("the image variety is the full torus: the solution set is V itself "
                            "and its dimension equals dim V");
    if (out.dim_x == pair.n())
        out.notes.push_back("the point variety is the full space: the solution set is the "
                            "logarithm of W and its dimension equals dim W");
    return out;
}

} // namespace eac
