// Monomial orders: lexicographic, graded reverse lexicographic, and block
// orders that eliminate a chosen set of variables.
#pragma once

#include <string>
#include <vector>

#include "eac/polynomial.hpp"

namespace eac {

enum class OrderKind { Lex, Grevlex, Block };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    /// Block orders only: variables in the leading (eliminated) block.
    std::vector<bool> elim;

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::Grevlex, {}}; }
    static MonomialOrder block(std::vector<bool> eliminated) {
        return {OrderKind::Block, std::move(eliminated)};
    }

    /// Three-way comparison: negative when a < b, positive when a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Stable identifier for basis caching.
    std::string key() const;
};

} // namespace eac
