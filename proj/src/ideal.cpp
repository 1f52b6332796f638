#include "eac/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>

#include "eac/qmatrix.hpp"

namespace eac {

namespace {

std::atomic<long> g_step_limit{1'000'000};

struct StepCounter {
    long used = 0;
    long limit = g_step_limit.load();

    void tick() {
        if (++used > limit)
            throw ResourceLimitError("reduction step limit exceeded (" +
                                     std::to_string(limit) + " steps)");
    }
};

int compare_grevlex_masked(const Monomial& a, const Monomial& b,
                           const std::vector<bool>* mask) {
    int da = 0, db = 0;
    size_t n = a.exponents.size();
    for (size_t i = 0; i < n; ++i) {
        if (mask && !(*mask)[i]) continue;
        da += a.exponents[i];
        db += b.exponents[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = n; i-- > 0;) {
        if (mask && !(*mask)[i]) continue;
        int d = a.exponents[i] - b.exponents[i];
        if (d != 0) return d < 0 ? 1 : -1; // smaller last entry ranks higher
    }
    return 0;
}

} // namespace

long reduction_step_limit() { return g_step_limit.load(); }

void set_reduction_step_limit(long limit) {
    g_step_limit.store(limit > 0 ? limit : 1);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
    case OrderKind::Lex:
        for (size_t i = 0; i < a.exponents.size(); ++i) {
            int d = a.exponents[i] - b.exponents[i];
            if (d != 0) return d;
        }
        return 0;
    case OrderKind::Grevlex:
        return compare_grevlex_masked(a, b, nullptr);
    case OrderKind::Block: {
        int c = compare_grevlex_masked(a, b, &elim);
        if (c != 0) return c;
        std::vector<bool> keep(elim.size());
        for (size_t i = 0; i < elim.size(); ++i) keep[i] = !elim[i];
        return compare_grevlex_masked(a, b, &keep);
    }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Block: {
        std::string k = "block:";
        for (bool b : elim) k += b ? '1' : '0';
        return k;
    }
    }
    return "?";
}

namespace {

using Term = std::pair<Monomial, Rational>;

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return *best;
}

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    Rational lc = leading_term(p, order).second;
    return p.scaled(1 / lc);
}

Polynomial nf_impl(const Polynomial& p, const std::vector<Polynomial>& basis,
                   const MonomialOrder& order, StepCounter& steps) {
    Polynomial work = p;
    Polynomial rem(p.ring());
    while (!work.is_zero()) {
        Term lt = leading_term(work, order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Term glt = leading_term(g, order);
            if (!glt.first.divides(lt.first)) continue;
            steps.tick();
            Rational c = lt.second / glt.second;
            work = work - g * Polynomial::monomial(g.ring(), lt.first / glt.first, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::monomial(work.ring(), lt.first, lt.second);
            rem = rem + t;
            work = work - t;
        }
    }
    return rem;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Term lf = leading_term(f, order);
    Term lg = leading_term(g, order);
    Monomial l = lf.first.lcm(lg.first);
    Polynomial a = f * Polynomial::monomial(f.ring(), l / lf.first, 1 / lf.second);
    Polynomial b = g * Polynomial::monomial(g.ring(), l / lg.first, 1 / lg.second);
    return a - b;
}

struct PairRec {
    int sugar;
    Monomial lcm;
    int i, j;
};

std::vector<Polynomial> buchberger_impl(const std::vector<Polynomial>& gens,
                                        const MonomialOrder& order,
                                        StepCounter& steps) {
    std::vector<Polynomial> basis;
    std::vector<int> sugar;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!basis.empty() && !(*g.ring() == *basis.front().ring()))
            throw RingMismatchError("generators from different ring contexts");
        basis.push_back(monic(g, order));
        sugar.push_back(g.total_degree());
    }
    if (basis.empty()) return {};

    auto pair_less = [&order](const PairRec& a, const PairRec& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairRec, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> done;

    auto make_pair_rec = [&](int i, int j) {
        Term li = leading_term(basis[i], order);
        Term lj = leading_term(basis[j], order);
        Monomial l = li.first.lcm(lj.first);
        int si = sugar[i] + l.degree() - li.first.degree();
        int sj = sugar[j] + l.degree() - lj.first.degree();
        return PairRec{std::max(si, sj), l, i, j};
    };

    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(basis.size()); ++j)
            queue.insert(make_pair_rec(i, j));

    while (!queue.empty()) {
        PairRec pr = *queue.begin();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});

        Term li = leading_term(basis[pr.i], order);
        Term lj = leading_term(basis[pr.j], order);
        if (li.first.coprime(lj.first)) continue; // product criterion

        // Chain criterion: a third element dividing the lcm whose pairs
        // with both ends were already treated makes this pair redundant.
        bool redundant = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!leading_term(basis[k], order).first.divides(pr.lcm)) continue;
            auto ik = std::minmax(pr.i, k);
            auto kj = std::minmax(k, pr.j);
            if (done.count({ik.first, ik.second}) && done.count({kj.first, kj.second}))
                redundant = true;
        }
        if (redundant) continue;

        Polynomial h = nf_impl(spoly(basis[pr.i], basis[pr.j], order), basis, order, steps);
        if (h.is_zero()) continue;
        h = monic(h, order);
        basis.push_back(h);
        sugar.push_back(pr.sugar);
        int newi = static_cast<int>(basis.size()) - 1;
        for (int t = 0; t < newi; ++t) queue.insert(make_pair_rec(t, newi));
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<int> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return order.compare(leading_term(basis[a], order).first,
                             leading_term(basis[b], order).first) < 0;
    });
    std::vector<Polynomial> minimal;
    for (int i : idx) {
        Monomial lm = leading_term(basis[i], order).first;
        bool covered = false;
        for (const auto& kept : minimal)
            if (leading_term(kept, order).first.divides(lm)) { covered = true; break; }
        if (!covered) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails; leading monomials are pairwise non-dividing so
    // they survive and the result is the unique reduced basis.
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = monic(nf_impl(reduced[i], others, order, steps), order);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_term(a, order).first,
                             leading_term(b, order).first) > 0;
    });
    return reduced;
}

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order) {
    StepCounter steps;
    return buchberger_impl(gens, order, steps);
}

struct Ideal::Impl {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::map<std::string, std::vector<Polynomial>> cache;
    mutable std::mutex mutex;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : impl_(std::make_shared<Impl>()) {
    impl_->ring = std::move(ring);
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!(*g.ring() == *impl_->ring))
            throw RingMismatchError("generator outside the ideal's ring");
        impl_->gens.push_back(std::move(g));
    }
}

const RingPtr& Ideal::ring() const {
    static const RingPtr none;
    return impl_ ? impl_->ring : none;
}

const std::vector<Polynomial>& Ideal::generators() const {
    static const std::vector<Polynomial> none;
    return impl_ ? impl_->gens : none;
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order) const {
    if (!impl_)
        throw PreconditionError("operation on an empty ideal handle");
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->cache.find(order.key());
    if (it != impl_->cache.end()) return it->second;
    StepCounter steps;
    auto gb = buchberger_impl(impl_->gens, order, steps);
    return impl_->cache.emplace(order.key(), std::move(gb)).first->second;
}

bool Ideal::is_proper(const MonomialOrder& order) const {
    const auto& gb = basis(order);
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return false;
    return true;
}

bool Ideal::contains(const Polynomial& p, const MonomialOrder& order) const {
    return normal_form(p, *this, order).is_zero();
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order) {
    const auto& gb = ideal.basis(order);
    StepCounter steps;
    return nf_impl(p, gb, order, steps);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    StepCounter steps;
    return nf_impl(p, basis, order, steps);
}

namespace {

/// First (lexicographically) subset of the given size on which no
/// leading-term support is fully contained; empty optional when none.
bool find_independent(const std::vector<uint32_t>& supports, int n, int size,
                      std::vector<int>& out, uint32_t chosen, int next, int left) {
    if (left == 0) {
        for (uint32_t s : supports)
            if ((s & chosen) == s) return false;
        return true;
    }
    for (int v = next; v <= n - left; ++v) {
        out.push_back(v);
        if (find_independent(supports, n, size, out, chosen | (1u << v), v + 1, left - 1))
            return true;
        out.pop_back();
    }
    return false;
}

} // namespace

DimensionResult dimension(const Ideal& ideal, const MonomialOrder& order) {
    const auto& gb = ideal.basis(order);
    int n = ideal.nvars();
    if (n > 30)
        throw PreconditionError("dimension: more than 30 variables");

    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant())
            return DimensionResult{-1, {}};

    std::vector<uint32_t> supports;
    for (const auto& g : gb) {
        Monomial lm = leading_term(g, order).first;
        uint32_t s = 0;
        for (size_t i = 0; i < lm.exponents.size(); ++i)
            if (lm.exponents[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }

    for (int size = n; size >= 0; --size) {
        std::vector<int> out;
        if (find_independent(supports, n, size, out, 0, 0, size))
            return DimensionResult{size, out};
    }
    return DimensionResult{-1, {}}; // unreachable: size 0 always succeeds on proper ideals
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep) {
    int n = ideal.nvars();
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (int v : kept)
        if (v < 0 || v >= n) throw PreconditionError("eliminate: variable index out of range");

    std::vector<std::string> names;
    std::vector<int> index_map(n, -1);
    std::vector<bool> keep_mask(n, false);
    for (size_t i = 0; i < kept.size(); ++i) {
        names.push_back(ideal.ring()->vars[kept[i]]);
        index_map[kept[i]] = static_cast<int>(i);
        keep_mask[kept[i]] = true;
    }
    RingPtr target = Ring::make(names);

    if (ideal.generators().empty())
        return Ideal(target, {});

    std::vector<bool> elim(n);
    for (int i = 0; i < n; ++i) elim[i] = !keep_mask[i];
    const auto& gb = ideal.basis(MonomialOrder::block(elim));

    std::vector<Polynomial> out;
    for (const auto& g : gb)
        if (g.supported_on(keep_mask)) out.push_back(g.remap(target, index_map));
    return Ideal(target, std::move(out));
}

Ideal saturate_units(const Ideal& ideal, const std::vector<int>& vars) {
    int n = ideal.nvars();
    std::vector<int> sat = vars;
    std::sort(sat.begin(), sat.end());
    sat.erase(std::unique(sat.begin(), sat.end()), sat.end());
    for (int v : sat)
        if (v < 0 || v >= n) throw PreconditionError("saturate: variable index out of range");
    if (sat.empty()) return ideal;

    std::vector<std::string> names = ideal.ring()->vars;
    for (int v : sat) names.push_back(ideal.ring()->vars[v] + "_inv");
    RingPtr ext = Ring::make(names);

    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.remap(ext, embed));
    for (size_t k = 0; k < sat.size(); ++k) {
        Polynomial rel = Polynomial::variable(ext, sat[k]) *
                             Polynomial::variable(ext, n + static_cast<int>(k)) -
                         Polynomial::constant(ext, 1);
        gens.push_back(rel);
    }

    std::vector<int> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = i;
    Ideal extended(ext, std::move(gens));
    Ideal projected = eliminate(extended, keep);

    // Re-home into the original ring object (names match positionally).
    std::vector<Polynomial> back;
    for (const auto& g : projected.generators()) back.push_back(g.remap(ideal.ring(), embed));
    return Ideal(ideal.ring(), std::move(back));
}

std::vector<Polynomial> linear_part(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    int n = ideal.nvars();
    if (!ideal.is_proper())
        return {Polynomial::constant(ring, 1)};

    std::vector<Polynomial> nfs;
    nfs.push_back(normal_form(Polynomial::constant(ring, 1), ideal));
    for (int i = 0; i < n; ++i)
        nfs.push_back(normal_form(Polynomial::variable(ring, i), ideal));

    std::map<Monomial, int> columns;
    for (const auto& p : nfs)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, 0);
    int t = 0;
    for (auto& [m, idx] : columns) idx = t++;

    // Kernel of the transpose: rows indexed by monomials, columns by the
    // n+1 unknown coefficients.
    QMatrix at(t, QRow(n + 1, Rational(0)));
    for (int i = 0; i <= n; ++i)
        for (const auto& [m, c] : nfs[i].terms())
            at[columns[m]][i] = c;

    QMatrix kernel = kernel_basis(at, n + 1);
    std::vector<Polynomial> result;
    for (const auto& vec : kernel) {
        std::vector<Integer> prim = primitive_integer(vec);
        Polynomial p = Polynomial::constant(ring, Rational(prim[0]));
        for (int i = 0; i < n; ++i)
            if (prim[i + 1] != 0)
                p = p + Polynomial::variable(ring, i).scaled(Rational(prim[i + 1]));
        result.push_back(p);
    }
    return result;
}

} // namespace eac
