// Cyclotomic polynomials and exact arithmetic in Q(zeta_l), used for
// root-of-unity actions on division points. Kept separate from the
// rational-coefficient polynomial rings: only the unity-action checks
// need this coefficient field.
#pragma once

#include <vector>

#include "eac/polynomial.hpp"
#include "eac/rational.hpp"

namespace eac {

/// Dense coefficient vector (constant term first) of the l-th cyclotomic
/// polynomial, computed by exact division of t^l - 1 by the product of
/// the lower-level factors. Results are memoized.
const std::vector<Rational>& cyclotomic_coeffs(int l);

/// Phi_l as a Polynomial in the given univariate ring (default: ring "t").
Polynomial cyclotomic_polynomial(int l, const RingPtr& ring = nullptr);

/// Euler totient, the degree of Phi_l.
int euler_phi(int l);

/// An element of Q(zeta_l), stored as a polynomial in zeta of degree
/// < phi(l) (reduced modulo Phi_l). zeta_l is a primitive l-th root.
class CycloElement {
public:
    CycloElement() : level_(1), coeffs_{Rational(0)} {}
    CycloElement(int level, std::vector<Rational> coeffs);

    static CycloElement from_rational(int level, const Rational& value);
    static CycloElement zero(int level) { return from_rational(level, 0); }
    static CycloElement one(int level) { return from_rational(level, 1); }
    /// The canonical primitive root zeta_l.
    static CycloElement zeta(int level);

    int level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const CycloElement& other) const;

    CycloElement operator+(const CycloElement& other) const;
    CycloElement operator-(const CycloElement& other) const;
    CycloElement operator*(const CycloElement& other) const;
    CycloElement pow(int e) const; // e >= 0

    /// Embeds into Q(zeta_m) for any multiple m of the current level,
    /// via zeta_l = zeta_m^(m/l).
    CycloElement promote(int new_level) const;

    /// Display form as a polynomial in "z", e.g. "z^2 - 1/2".
    std::string str() const;

private:
    void reduce();

    int level_;
    std::vector<Rational> coeffs_;
};

/// Exact evaluation of a rational-coefficient polynomial at a cyclotomic
/// point; all coordinates must share one level.
CycloElement evaluate_cyclo(const Polynomial& p, const std::vector<CycloElement>& point);

} // namespace eac
