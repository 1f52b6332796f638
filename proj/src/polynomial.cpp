#include "eac/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace eac {

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += other.exponents[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= other.exponents[i];
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r(*this);
    for (size_t i = 0; i < exponents.size(); ++i)
        r.exponents[i] = std::max(exponents[i], other.exponents[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0 && other.exponents[i] > 0) return false;
    return true;
}

std::shared_ptr<const Ring> Ring::make(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return std::make_shared<const Ring>(Ring{std::move(names)});
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
    return std::make_shared<const Ring>(Ring{std::move(names)});
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
    if (constant != 0) terms_.emplace(Monomial::one(ring_->nvars()), constant);
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)) {
    for (auto& [m, c] : terms)
        if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(const RingPtr& ring, int index, int power) {
    if (index < 0 || index >= ring->nvars())
        throw PreconditionError("variable index out of range");
    Monomial m = Monomial::one(ring->nvars());
    m.exponents[index] = power;
    return monomial(ring, m, 1);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    return Polynomial(ring, c);
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (!ring_ || !other.ring_ || !(*ring_ == *other.ring_))
        throw RingMismatchError("polynomials from different ring contexts");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(other);
    Polynomial r(*this);
    for (const auto& [m, c] : other.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_ring(other);
    Polynomial r(*this);
    for (const auto& [m, c] : other.terms_) r.insert_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(other);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.insert_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    Polynomial r = constant(ring_, 1);
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!ring_ || !other.ring_) return terms_.empty() && other.terms_.empty();
    return *ring_ == *other.ring_ && terms_ == other.terms_;
}

bool Polynomial::supported_on(const std::vector<bool>& mask) const {
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0 && !mask[i]) return false;
    return true;
}

Polynomial Polynomial::remap(const RingPtr& target, const std::vector<int>& index_map) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial nm = Monomial::one(target->nvars());
        for (size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (index_map[i] < 0)
                throw PreconditionError("remap: eliminated variable still occurs");
            nm.exponents[index_map[i]] += m.exponents[i];
        }
        r.insert_term(nm, c);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    RingPtr target = ring_;
    for (const auto& img : images)
        if (img.ring_) {
            if (!(*img.ring_ == *target) && !(*img.ring_ == *ring_))
                target = img.ring_;
        }
    for (const auto& img : images)
        if (img.ring_ && !(*img.ring_ == *target))
            throw RingMismatchError("substitute: images in different rings");

    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (size_t i = 0; i < m.exponents.size(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            const Polynomial* image = nullptr;
            if (i < images.size() && images[i].ring_) image = &images[i];
            if (image)
                term = term * image->pow(e);
            else
                term = term * Polynomial::variable(target, static_cast<int>(i), e);
        }
        result = result + term;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (size_t i = 0; i < m.exponents.size(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Descending lexicographic on exponent vectors.
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::reverse(sorted.begin(), sorted.end());

    std::ostringstream out;
    bool first = true;
    for (const auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        bool unit_coeff = (a == 1);
        bool has_vars = m.degree() > 0;
        if (!unit_coeff || !has_vars) out << to_string(a);
        if (has_vars) {
            bool lead = unit_coeff;
            for (size_t i = 0; i < m.exponents.size(); ++i) {
                if (m.exponents[i] == 0) continue;
                if (!lead) out << "*";
                lead = false;
                out << ring_->vars[i];
                if (m.exponents[i] > 1) out << "^" << m.exponents[i];
            }
        }
    }
    return out.str();
}

} // namespace eac
