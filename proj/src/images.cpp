#include "eac/images.hpp"

namespace eac {

Ideal lin_image(const Ideal& ideal, const IntMatrix& m, const std::string& prefix) {
    int n = ideal.nvars();
    int k = m.rows();
    if (m.cols() != n)
        throw PreconditionError("lin_image: matrix width must match variable count");

    std::vector<std::string> names = ideal.ring()->vars;
    for (int i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
    RingPtr ext = Ring::make(names);

    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.remap(ext, embed));
    for (int i = 0; i < k; ++i) {
        Polynomial rel = Polynomial::variable(ext, n + i);
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0)
                rel = rel - Polynomial::variable(ext, j).scaled(Rational(m.at(i, j)));
        gens.push_back(rel);
    }

    std::vector<int> keep(k);
    for (int i = 0; i < k; ++i) keep[i] = n + i;
    return eliminate(Ideal(ext, std::move(gens)), keep);
}

Ideal mono_image(const Ideal& ideal, const IntMatrix& m, const std::string& prefix,
                 bool source_torus_closed) {
    int n = ideal.nvars();
    int k = m.rows();
    if (m.cols() != n)
        throw PreconditionError("mono_image: matrix width must match variable count");

    // Which variables get an adjoined inverse: all of them when the torus
    // restriction still has to happen here, otherwise only those the map
    // uses with a negative exponent.
    std::vector<int> inv_of(n, -1);
    std::vector<int> inverted;
    for (int j = 0; j < n; ++j) {
        bool needed = !source_torus_closed;
        for (int i = 0; i < k && !needed; ++i)
            if (m.at(i, j) < 0) needed = true;
        if (needed) {
            inv_of[j] = static_cast<int>(inverted.size());
            inverted.push_back(j);
        }
    }
    int z = static_cast<int>(inverted.size());

    // Layout: original y's, the adjoined inverses, the image coordinates.
    std::vector<std::string> names = ideal.ring()->vars;
    for (int j : inverted) names.push_back(ideal.ring()->vars[j] + "_inv");
    for (int i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
    RingPtr ext = Ring::make(names);

    std::vector<int> embed(n);
    for (int i = 0; i < n; ++i) embed[i] = i;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.remap(ext, embed));
    for (int idx = 0; idx < z; ++idx)
        gens.push_back(Polynomial::variable(ext, inverted[idx]) *
                           Polynomial::variable(ext, n + idx) -
                       Polynomial::constant(ext, 1));
    for (int i = 0; i < k; ++i) {
        Monomial mono = Monomial::one(n + z + k);
        for (int j = 0; j < n; ++j) {
            long e = m.at(i, j).get_si();
            if (e > 0) mono.exponents[j] = static_cast<int>(e);
            if (e < 0) mono.exponents[n + inv_of[j]] = static_cast<int>(-e);
        }
        gens.push_back(Polynomial::variable(ext, n + z + i) -
                       Polynomial::monomial(ext, mono, 1));
    }

    std::vector<int> keep(k);
    for (int i = 0; i < k; ++i) keep[i] = n + z + i;
    Ideal image = eliminate(Ideal(ext, std::move(gens)), keep);
    if (!image.is_proper())
        throw PreconditionError("mono_image: the variety misses the torus");
    return image;
}

} // namespace eac
