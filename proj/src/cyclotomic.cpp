#include "eac/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace eac {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Quotient of an exact division by a monic divisor; remainder must be 0.
Dense div_exact(Dense num, const Dense& den) {
    Dense q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty())
        throw InternalCheckError("cyclotomic division left a remainder");
    return q;
}

/// Remainder modulo a monic divisor.
Dense mod_monic(Dense num, const Dense& den) {
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        trim(num);
    }
    return num;
}

std::map<int, Dense>& phi_cache() {
    static std::map<int, Dense> cache;
    return cache;
}

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

const Dense& phi_unlocked(int l) {
    auto& cache = phi_cache();
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;

    // t^l - 1
    Dense num(l + 1, Rational(0));
    num[0] = -1;
    num[l] = 1;
    Dense divisor{Rational(1)};
    for (int d = 1; d < l; ++d)
        if (l % d == 0) divisor = mul(divisor, phi_unlocked(d));
    return cache.emplace(l, div_exact(std::move(num), divisor)).first->second;
}

} // namespace

const std::vector<Rational>& cyclotomic_coeffs(int l) {
    if (l < 1) throw PreconditionError("cyclotomic level must be >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex());
    return phi_unlocked(l);
}

int euler_phi(int l) {
    return static_cast<int>(cyclotomic_coeffs(l).size()) - 1;
}

Polynomial cyclotomic_polynomial(int l, const RingPtr& ring) {
    RingPtr r = ring ? ring : Ring::make({std::string("t")});
    if (r->nvars() != 1)
        throw PreconditionError("cyclotomic polynomial needs a univariate ring");
    const Dense& coeffs = cyclotomic_coeffs(l);
    Polynomial p(r);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        p = p + Polynomial::variable(r, 0, static_cast<int>(i)).scaled(coeffs[i]);
    }
    return p;
}

CycloElement::CycloElement(int level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (level < 1) throw PreconditionError("cyclotomic level must be >= 1");
    reduce();
}

void CycloElement::reduce() {
    const Dense& phi = cyclotomic_coeffs(level_);
    coeffs_ = mod_monic(std::move(coeffs_), phi);
    // Fixed-width dense form, so equality is plain vector equality.
    coeffs_.resize(static_cast<size_t>(euler_phi(level_)), Rational(0));
}

CycloElement CycloElement::from_rational(int level, const Rational& value) {
    std::vector<Rational> c{value};
    return CycloElement(level, std::move(c));
}

CycloElement CycloElement::zeta(int level) {
    if (level == 1) return one(1);
    std::vector<Rational> c{Rational(0), Rational(1)};
    return CycloElement(level, std::move(c));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycloElement::operator==(const CycloElement& other) const {
    return level_ == other.level_ && coeffs_ == other.coeffs_;
}

CycloElement CycloElement::operator+(const CycloElement& other) const {
    if (level_ != other.level_)
        throw RingMismatchError("cyclotomic elements of different levels");
    Dense r = coeffs_;
    if (other.coeffs_.size() > r.size()) r.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) r[i] += other.coeffs_[i];
    return CycloElement(level_, std::move(r));
}

CycloElement CycloElement::operator-(const CycloElement& other) const {
    if (level_ != other.level_)
        throw RingMismatchError("cyclotomic elements of different levels");
    Dense r = coeffs_;
    if (other.coeffs_.size() > r.size()) r.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) r[i] -= other.coeffs_[i];
    return CycloElement(level_, std::move(r));
}

CycloElement CycloElement::operator*(const CycloElement& other) const {
    if (level_ != other.level_)
        throw RingMismatchError("cyclotomic elements of different levels");
    Dense a = coeffs_, b = other.coeffs_;
    trim(a);
    trim(b);
    return CycloElement(level_, mul(a, b));
}

CycloElement CycloElement::pow(int e) const {
    if (e < 0) throw PreconditionError("negative cyclotomic power");
    CycloElement r = one(level_);
    CycloElement base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

CycloElement CycloElement::promote(int new_level) const {
    if (new_level % level_ != 0)
        throw PreconditionError("cyclotomic promotion needs a level multiple");
    if (new_level == level_) return *this;
    int step = new_level / level_;
    CycloElement z = zeta(new_level).pow(step);
    CycloElement result = zero(new_level);
    CycloElement zpow = one(new_level);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            CycloElement term = zpow;
            Dense scaled = term.coeffs();
            for (auto& c : scaled) c *= coeffs_[i];
            result = result + CycloElement(new_level, std::move(scaled));
        }
        zpow = zpow * z;
    }
    return result;
}

std::string CycloElement::str() const {
    Dense c = coeffs_;
    trim(c);
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t idx = c.size(); idx-- > 0;) {
        if (c[idx] == 0) continue;
        Rational a = c[idx];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && idx > 0;
        if (!unit) out << to_string(a);
        if (idx > 0) {
            if (!unit) out << "*";
            out << "z";
            if (idx > 1) out << "^" << idx;
        }
    }
    return out.str();
}

CycloElement evaluate_cyclo(const Polynomial& p, const std::vector<CycloElement>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw PreconditionError("point dimension does not match ring");
    int level = point.empty() ? 1 : point[0].level();
    for (const auto& c : point)
        if (c.level() != level)
            throw RingMismatchError("mixed cyclotomic levels in one point");
    CycloElement total = CycloElement::zero(level);
    for (const auto& [m, coeff] : p.terms()) {
        CycloElement v = CycloElement::from_rational(level, coeff);
        for (size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) v = v * point[i].pow(m.exponents[i]);
        total = total + v;
    }
    return total;
}

} // namespace eac
