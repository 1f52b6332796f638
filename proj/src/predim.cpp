#include "eac/predim.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "eac/cyclotomic.hpp"
#include "eac/images.hpp"
#include "eac/qmatrix.hpp"
#include "eac/sublattice.hpp"

namespace eac {

namespace {

QMatrix to_qmatrix(const IntMatrix& m) {
    QMatrix q(m.rows(), QRow(m.cols(), Rational(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q[i][j] = Rational(m.at(i, j));
    return q;
}

int checked_int(const Integer& e) {
    if (!e.fits_sint_p())
        throw PreconditionError("integer entry too large for an exponent");
    return static_cast<int>(e.get_si());
}

/// y^(m+) - y^(m-) for an integer relation row m.
Polynomial binomial_of_row(const RingPtr& ring, const IntMatrix& rels, int row) {
    int n = rels.cols();
    Monomial pos = Monomial::one(n), neg = Monomial::one(n);
    for (int j = 0; j < n; ++j) {
        int e = checked_int(rels.at(row, j));
        if (e > 0) pos.exponents[j] = e;
        if (e < 0) neg.exponents[j] = -e;
    }
    return Polynomial::monomial(ring, pos, 1) - Polynomial::monomial(ring, neg, 1);
}

} // namespace

SubsetSpec SubsetSpec::empty() {
    SubsetSpec s;
    s.is_subset_ = true;
    return s;
}

SubsetSpec SubsetSpec::subset(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    SubsetSpec s;
    s.is_subset_ = true;
    s.indices_ = std::move(indices);
    return s;
}

SubsetSpec SubsetSpec::combinations(IntMatrix rows) {
    SubsetSpec s;
    s.is_subset_ = false;
    s.rows_ = std::move(rows);
    return s;
}

IntMatrix SubsetSpec::rows(int n) const {
    if (is_subset_) {
        IntMatrix m(static_cast<int>(indices_.size()), n);
        for (size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] < 0 || indices_[i] >= n)
                throw PreconditionError("subset index out of range");
            m.at(static_cast<int>(i), indices_[i]) = 1;
        }
        return m;
    }
    if (rows_.rows() > 0 && rows_.cols() != n)
        throw PreconditionError("combination rows have wrong width");
    if (rows_.rows() == 0) return IntMatrix(0, n);
    return rows_;
}

SubsetSpec SubsetSpec::unite(const SubsetSpec& other, int n) const {
    IntMatrix stacked = rows(n);
    IntMatrix o = other.rows(n);
    for (int i = 0; i < o.rows(); ++i) stacked.append_row(o.row(i));
    return combinations(std::move(stacked));
}

std::string SubsetSpec::str() const {
    std::ostringstream out;
    if (is_subset_) {
        out << "{";
        for (size_t i = 0; i < indices_.size(); ++i)
            out << (i ? "," : "") << (indices_[i] + 1);
        out << "}";
        return out.str();
    }
    return rows_.str();
}

struct Configuration::Impl {
    Ideal locus_x, locus_y;
    Ideal locus_y_sat; ///< closure of the torus part, computed once
    IntMatrix lin_rels;
    std::vector<bool> kernel_mask;
    int height_bound;
    std::vector<std::string> names;
    int rel_rank = 0;

    mutable std::map<std::string, int> delta_cache, trx_cache, try_cache;
    mutable std::map<int, std::vector<SubsetSpec>> span_cache;
    mutable std::mutex mutex;
};

Configuration::Configuration(Ideal locus_x, Ideal locus_y, IntMatrix lin_rels,
                             std::vector<bool> kernel_mask, int height_bound,
                             std::vector<std::string> generator_names)
    : impl_(std::make_shared<Impl>()) {
    int n = locus_x.nvars();
    if (n < 1) throw PreconditionError("configuration needs at least one generator");
    if (locus_y.nvars() != n)
        throw PreconditionError("locus ideals disagree on the generator count");
    if (lin_rels.rows() == 0) lin_rels = IntMatrix(0, n);
    if (lin_rels.cols() != n)
        throw PreconditionError("linear relation rows have wrong width");
    if (static_cast<int>(kernel_mask.size()) != n)
        throw PreconditionError("kernel mask has wrong length");
    if (height_bound < 1) throw PreconditionError("height bound must be >= 1");

    if (!locus_x.is_proper() || !locus_y.is_proper())
        throw PreconditionError("locus ideals must be proper (the configuration presents points)");

    const RingPtr& rx = locus_x.ring();
    const RingPtr& ry = locus_y.ring();
    for (int i = 0; i < lin_rels.rows(); ++i) {
        Polynomial lin(rx);
        for (int j = 0; j < n; ++j)
            if (lin_rels.at(i, j) != 0)
                lin = lin + Polynomial::variable(rx, j).scaled(Rational(lin_rels.at(i, j)));
        if (!locus_x.contains(lin))
            throw PreconditionError("linear relation row " + std::to_string(i + 1) +
                                    " does not vanish on the point locus");
        if (!locus_y.contains(binomial_of_row(ry, lin_rels, i)))
            throw PreconditionError("linear relation row " + std::to_string(i + 1) +
                                    " has no multiplicative counterpart in the image locus");
    }
    for (int i = 0; i < n; ++i) {
        if (!kernel_mask[i]) continue;
        Polynomial k = Polynomial::variable(ry, i) - Polynomial::constant(ry, 1);
        if (!locus_y.contains(k))
            throw PreconditionError("kernel generator " + std::to_string(i + 1) +
                                    " is not pinned to 1 in the image locus");
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Ideal locus_y_sat = saturate_units(locus_y, all);
    if (!locus_y_sat.is_proper())
        throw PreconditionError("image locus misses the torus");

    if (generator_names.empty())
        for (int i = 1; i <= n; ++i) generator_names.push_back("g" + std::to_string(i));
    if (static_cast<int>(generator_names.size()) != n)
        throw PreconditionError("generator name list has wrong length");

    impl_->locus_x = std::move(locus_x);
    impl_->locus_y = std::move(locus_y);
    impl_->locus_y_sat = std::move(locus_y_sat);
    impl_->lin_rels = std::move(lin_rels);
    impl_->kernel_mask = std::move(kernel_mask);
    impl_->height_bound = height_bound;
    impl_->names = std::move(generator_names);
    impl_->rel_rank = rank_q(impl_->lin_rels);
}

int Configuration::ngens() const { return impl_->locus_x.nvars(); }
const Ideal& Configuration::locus_x() const { return impl_->locus_x; }
const Ideal& Configuration::locus_y() const { return impl_->locus_y; }
const IntMatrix& Configuration::lin_rels() const { return impl_->lin_rels; }
const std::vector<bool>& Configuration::kernel_mask() const { return impl_->kernel_mask; }
int Configuration::height_bound() const { return impl_->height_bound; }
const std::vector<std::string>& Configuration::generator_names() const { return impl_->names; }

int Configuration::dim_q(const SubsetSpec& s) const {
    int n = ngens();
    IntMatrix stacked = s.rows(n);
    const IntMatrix& rels = impl_->lin_rels;
    for (int i = 0; i < rels.rows(); ++i) stacked.append_row(rels.row(i));
    return rank_q(stacked) - impl_->rel_rank;
}

int Configuration::trdeg_x(const SubsetSpec& s) const {
    // Both transcendence degrees are invariant under replacing the spec
    // by a basis of its rational span (roots and rational combinations
    // are algebraic over the originals), so compute with the canonical
    // saturated basis: fewer rows, smaller entries.
    IntMatrix m = saturate_rows(s.rows(ngens()));
    if (m.rows() == 0) return 0;
    std::string key = "x:" + m.str();
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->trx_cache.find(key);
        if (it != impl_->trx_cache.end()) return it->second;
    }
    int value = dimension(lin_image(impl_->locus_x, m)).dim;
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->trx_cache.emplace(std::move(key), value).first->second;
}

int Configuration::trdeg_y(const SubsetSpec& s) const {
    IntMatrix m = saturate_rows(s.rows(ngens()));
    if (m.rows() == 0) return 0;
    std::string key = "y:" + m.str();
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->try_cache.find(key);
        if (it != impl_->try_cache.end()) return it->second;
    }
    int value = dimension(mono_image(impl_->locus_y_sat, m, "b", true)).dim;
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->try_cache.emplace(std::move(key), value).first->second;
}

std::string Configuration::span_signature(const SubsetSpec& s) const {
    QMatrix span = to_qmatrix(s.rows(ngens()));
    QMatrix rels = to_qmatrix(impl_->lin_rels);
    span.insert(span.end(), rels.begin(), rels.end());
    return span_key(std::move(span));
}

int Configuration::delta(const SubsetSpec& s) const {
    // delta depends only on the rational span of the spec together with
    // the relation space, so memoize on that subspace.
    std::string key = span_signature(s);
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->delta_cache.find(key);
        if (it != impl_->delta_cache.end()) return it->second;
    }
    int value = trdeg_x(s) + trdeg_y(s) - dim_q(s);
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->delta_cache.emplace(key, value).first->second;
}

int Configuration::delta_rel(const SubsetSpec& x, const SubsetSpec& base) const {
    int n = ngens();
    SubsetSpec u = x.unite(base, n);
    int via_delta = delta(u) - delta(base);
    int componentwise = (trdeg_x(u) - trdeg_x(base)) + (trdeg_y(u) - trdeg_y(base)) -
                        (dim_q(u) - dim_q(base));
    if (via_delta != componentwise)
        throw InternalCheckError("relative delta disagrees between its two computations");
    return via_delta;
}

std::vector<SubsetSpec> Configuration::span_specs(int height) const {
    if (height < 1) throw PreconditionError("height bound must be >= 1");
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->span_cache.find(height);
        if (it != impl_->span_cache.end()) return it->second;
    }

    int n = ngens();
    // Coordinates of the quotient by the relation span: the free columns
    // of the reduced relation matrix.
    QMatrix rels = to_qmatrix(impl_->lin_rels);
    std::vector<int> pivots = rref(rels);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    int q = static_cast<int>(free_cols.size());

    std::vector<SubsetSpec> result;
    if (q > 0) {
        auto pool = primitive_vectors(q, height);
        // Breadth-first join closure over subspaces of the quotient,
        // canonicalized by the saturated HNF basis.
        std::map<std::string, IntMatrix> known;
        std::vector<IntMatrix> frontier;
        auto key_of = [](const IntMatrix& m) {
            std::ostringstream out;
            out << m.rows() << ":" << m.str();
            return out.str();
        };
        for (const auto& v : pool) {
            IntMatrix one(0, q);
            one.append_row(v);
            IntMatrix canon = saturate_rows(one);
            std::string key = key_of(canon);
            if (known.emplace(key, canon).second) frontier.push_back(canon);
        }
        while (!frontier.empty()) {
            std::vector<IntMatrix> next;
            for (const auto& base : frontier) {
                if (base.rows() == q) continue;
                for (const auto& v : pool) {
                    IntMatrix joined = base;
                    joined.append_row(v);
                    if (rank_q(joined) == base.rows()) continue;
                    IntMatrix canon = saturate_rows(joined);
                    std::string key = key_of(canon);
                    if (known.emplace(key, canon).second) next.push_back(canon);
                }
            }
            frontier = std::move(next);
        }

        std::vector<IntMatrix> ordered;
        for (auto& [key, m] : known) ordered.push_back(m);
        std::sort(ordered.begin(), ordered.end(), [](const IntMatrix& a, const IntMatrix& b) {
            if (a.rows() != b.rows()) return a.rows() < b.rows();
            Integer ha = a.height(), hb = b.height();
            if (ha != hb) return ha < hb;
            return a.str() < b.str();
        });

        for (const auto& m : ordered) {
            IntMatrix lifted(0, n);
            for (int i = 0; i < m.rows(); ++i) {
                std::vector<Integer> row(n, Integer(0));
                for (int j = 0; j < q; ++j) row[free_cols[j]] = m.at(i, j);
                lifted.append_row(row);
            }
            result.push_back(SubsetSpec::combinations(lifted));
        }
    }

    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->span_cache.emplace(height, std::move(result)).first->second;
}

StrongExtVerdict Configuration::strong_ext(const SubsetSpec& base, int height,
                                           const std::optional<SubsetSpec>& within) const {
    int n = ngens();
    QMatrix bound_span;
    if (within) {
        bound_span = to_qmatrix(within->rows(n));
        QMatrix rels = to_qmatrix(impl_->lin_rels);
        bound_span.insert(bound_span.end(), rels.begin(), rels.end());
    }

    int base_delta = delta(base);
    StrongExtVerdict verdict;
    verdict.height = height;
    for (const auto& spec : span_specs(height)) {
        if (within) {
            bool inside = true;
            IntMatrix rows = spec.rows(n);
            for (int i = 0; i < rows.rows() && inside; ++i) {
                QRow v(n);
                for (int j = 0; j < n; ++j) v[j] = Rational(rows.at(i, j));
                inside = in_row_span(v, bound_span);
            }
            if (!inside) continue;
        }
        int d = delta(spec.unite(base, n)) - base_delta;
        if (d < 0) {
            verdict.strong = false;
            verdict.witness = spec;
            verdict.witness_delta = d;
            return verdict;
        }
    }
    return verdict;
}

int Configuration::partial_dim(const SubsetSpec& x) const {
    return partial_dim(x, impl_->height_bound);
}

int Configuration::partial_dim(const SubsetSpec& x, int height) const {
    int n = ngens();
    int best = delta(x);
    for (const auto& spec : span_specs(height))
        best = std::min(best, delta(x.unite(spec, n)));
    return best;
}

Configuration kernel_demo(int size, int height_bound) {
    if (size < 1) throw PreconditionError("kernel demo needs size >= 1");
    RingPtr rx = Ring::make(size, "x");
    RingPtr ry = Ring::make(size, "y");

    // pi/k for k = 1..size; x1 = k * xk.
    std::vector<Polynomial> gens_x;
    IntMatrix rels(0, size);
    for (int k = 2; k <= size; ++k) {
        gens_x.push_back(Polynomial::variable(rx, 0) -
                         Polynomial::variable(rx, k - 1).scaled(Rational(k)));
        std::vector<Integer> row(size, Integer(0));
        row[0] = 1;
        row[k - 1] = -k;
        rels.append_row(row);
    }

    // Images are the canonical primitive roots: Phi_k(y_k) = 0, with the
    // compatibility y_k^(k/m) = y_m for every divisor m of k.
    std::vector<Polynomial> gens_y;
    for (int k = 1; k <= size; ++k) {
        Polynomial phi = cyclotomic_polynomial(k, nullptr);
        std::vector<Polynomial> images(1, Polynomial::variable(ry, k - 1));
        gens_y.push_back(phi.substitute(images));
        for (int m = 1; m < k; ++m) {
            if (k % m != 0) continue;
            gens_y.push_back(Polynomial::variable(ry, k - 1).pow(k / m) -
                             Polynomial::variable(ry, m - 1));
        }
    }

    std::vector<bool> kernel(size, false);
    kernel[0] = true;

    std::vector<std::string> names;
    names.push_back("pi");
    for (int k = 2; k <= size; ++k) names.push_back("pi_" + std::to_string(k));

    Configuration config(Ideal(rx, std::move(gens_x)), Ideal(ry, std::move(gens_y)),
                         std::move(rels), std::move(kernel), height_bound, std::move(names));

    // The construction promises delta = 0 on every subset and on every
    // enumerated span spec; verify rather than trust.
    for (long mask = 0; mask < (1L << size); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < size; ++i)
            if (mask & (1L << i)) idx.push_back(i);
        if (config.delta(SubsetSpec::subset(idx)) != 0)
            throw InternalCheckError("kernel demo: delta != 0 on a generator subset");
    }
    for (const auto& spec : config.span_specs(height_bound))
        if (config.delta(spec) != 0)
            throw InternalCheckError("kernel demo: delta != 0 on a span spec");
    return config;
}

} // namespace eac
