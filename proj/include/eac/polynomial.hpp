// Sparse multivariate polynomials over exact rationals. Values are
// immutable after construction and canonical: no zero coefficients are
// stored, so structural equality coincides with mathematical equality.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eac/errors.hpp"
#include "eac/rational.hpp"

namespace eac {

/// Exponent vector of fixed length (the ambient variable count).
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int degree() const;
    int operator[](int i) const { return exponents[i]; }
    size_t size() const { return exponents.size(); }

    Monomial operator*(const Monomial& other) const;
    /// Componentwise quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    auto operator<=>(const Monomial& other) const = default;
};

/// A ring context: the variable names fix both the ambient dimension and
/// the meaning of exponent positions. Compared structurally.
struct Ring {
    std::vector<std::string> vars;

    bool operator==(const Ring& other) const = default;
    int nvars() const { return static_cast<int>(vars.size()); }

    /// Variables prefix1, prefix2, ..., prefixN.
    static std::shared_ptr<const Ring> make(int n, const std::string& prefix);
    static std::shared_ptr<const Ring> make(std::vector<std::string> names);
};

using RingPtr = std::shared_ptr<const Ring>;

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& constant);
    Polynomial(RingPtr ring, TermMap terms);

    static Polynomial variable(const RingPtr& ring, int index, int power = 1);
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial monomial(const RingPtr& ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const; // -1 for the zero polynomial
    int nvars() const { return ring_ ? ring_->nvars() : 0; }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// True when every variable with a nonzero exponent somewhere in the
    /// polynomial is flagged in `mask`.
    bool supported_on(const std::vector<bool>& mask) const;

    /// Moves the polynomial into `target`, sending variable i of the old
    /// ring to variable index_map[i] of the new one (-1 = must not occur).
    Polynomial remap(const RingPtr& target, const std::vector<int>& index_map) const;

    /// Simultaneous substitution x_i -> images[i]. Unmapped positions are
    /// signalled by an empty (default) polynomial and act as the identity.
    /// All non-identity images must share one ring, which becomes the ring
    /// of the result (images in the original ring are the common case).
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Exact evaluation at a rational point.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Canonical display form: terms sorted lexicographically by exponent
    /// vector, descending, e.g. "x1^2*x2 - 2/3*x2 + 1".
    std::string str() const;

private:
    void insert_term(const Monomial& m, const Rational& c);
    void require_same_ring(const Polynomial& other) const;

    RingPtr ring_;
    TermMap terms_;
};

} // namespace eac
