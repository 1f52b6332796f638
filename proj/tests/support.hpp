// Shared helpers for the test suites: compact construction of rings,
// polynomials (via the document parser) and ideals.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "eac/ideal.hpp"
#include "eac/parser.hpp"

namespace eactest {

using namespace eac;

inline RingPtr xring(int n) { return Ring::make(n, "x"); }
inline RingPtr yring(int n) { return Ring::make(n, "y"); }

inline Polynomial px(const RingPtr& r, const std::string& s) {
    return parse_polynomial(s, r, 'x');
}

inline Polynomial py(const RingPtr& r, const std::string& s) {
    return parse_polynomial(s, r, 'y');
}

inline Ideal ideal_x(const RingPtr& r, const std::vector<std::string>& polys) {
    std::vector<Polynomial> gens;
    for (const auto& s : polys) gens.push_back(px(r, s));
    return Ideal(r, std::move(gens));
}

inline Ideal ideal_y(const RingPtr& r, const std::vector<std::string>& polys) {
    std::vector<Polynomial> gens;
    for (const auto& s : polys) gens.push_back(py(r, s));
    return Ideal(r, std::move(gens));
}

/// Random sparse polynomial with small coefficients.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_degree,
                              int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, max_degree);
    Polynomial p(ring);
    int n = ring->nvars();
    for (int t = 0; t < terms; ++t) {
        Monomial m = Monomial::one(n);
        int budget = max_degree;
        for (int i = 0; i < n; ++i) {
            int e = expo(rng) % (budget + 1);
            m.exponents[i] = e;
            budget -= e;
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        p = p + Polynomial::monomial(ring, m, Rational(c));
    }
    return p;
}

} // namespace eactest
