// Small fully enumerable structures for the partial-dimension laws:
// the universe is the set of rank-1 span specs at the height bound, and
// the closure operator is cl(A) = { b : pd(A + b) = pd(A) }.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eac/predim.hpp"

namespace eactest {

struct Toy {
    eac::Configuration config;
    int height;
    std::vector<eac::SubsetSpec> universe; ///< one spec per rank-1 subspace
    std::string name;
    mutable std::map<std::string, int> pd_cache;
};

inline Toy make_toy(eac::Configuration config, int height, std::string name) {
    std::vector<eac::SubsetSpec> universe;
    for (const auto& spec : config.span_specs(height))
        if (spec.rows(config.ngens()).rows() == 1) universe.push_back(spec);
    return Toy{std::move(config), height, std::move(universe), std::move(name), {}};
}

inline eac::SubsetSpec join_specs(const Toy& toy, const std::set<int>& elements) {
    eac::SubsetSpec acc = eac::SubsetSpec::empty();
    for (int e : elements) acc = acc.unite(toy.universe[e], toy.config.ngens());
    return acc;
}

inline int pd(const Toy& toy, const std::set<int>& elements) {
    eac::SubsetSpec spec = join_specs(toy, elements);
    std::string key = toy.config.span_signature(spec);
    auto it = toy.pd_cache.find(key);
    if (it != toy.pd_cache.end()) return it->second;
    int value = toy.config.partial_dim(spec, toy.height);
    toy.pd_cache.emplace(std::move(key), value);
    return value;
}

inline std::set<int> closure(const Toy& toy, const std::set<int>& elements) {
    int base = pd(toy, elements);
    std::set<int> out;
    for (size_t b = 0; b < toy.universe.size(); ++b) {
        std::set<int> extended = elements;
        extended.insert(static_cast<int>(b));
        if (pd(toy, extended) == base) out.insert(static_cast<int>(b));
    }
    return out;
}

/// The partial-dimension unit laws and the closure-operator laws, checked
/// on every subset of `base_pool` (for the quantified sets) and every
/// universe element (for the points). Returns a failure description.
inline std::optional<std::string> check_toy_laws(const Toy& toy,
                                                 const std::vector<int>& base_pool) {
    auto fail = [&](const std::string& what) {
        return std::optional<std::string>(toy.name + ": " + what);
    };
    int m = static_cast<int>(base_pool.size());
    int u = static_cast<int>(toy.universe.size());

    std::vector<std::set<int>> bases;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::set<int> a;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) a.insert(base_pool[i]);
        bases.push_back(std::move(a));
    }

    // Unit laws: pd(A) <= pd(aA) <= pd(A) + 1, and the two-point
    // exchange consequence pd(aA) = pd(A) = pd(bA) => pd(abA) = pd(A).
    for (const auto& a_set : bases) {
        int base = pd(toy, a_set);
        for (int a = 0; a < u; ++a) {
            std::set<int> aa = a_set;
            aa.insert(a);
            int with_a = pd(toy, aa);
            if (!(base <= with_a && with_a <= base + 1))
                return fail("unit growth law failed");
            for (int b = a; b < u; ++b) {
                std::set<int> bb = a_set;
                bb.insert(b);
                if (with_a != base || pd(toy, bb) != base) continue;
                std::set<int> ab = aa;
                ab.insert(b);
                if (pd(toy, ab) != base) {
                    std::ostringstream why;
                    why << "two-point law failed at a=" << a << " b=" << b;
                    return fail(why.str());
                }
            }
        }
    }

    // Closure laws: extensive, monotone, idempotent, exchange.
    for (const auto& a_set : bases) {
        std::set<int> cl_a = closure(toy, a_set);
        for (int e : a_set)
            if (!cl_a.count(e)) return fail("closure is not extensive");
        for (const auto& b_set : bases) {
            if (!std::includes(b_set.begin(), b_set.end(), a_set.begin(), a_set.end()))
                continue;
            std::set<int> cl_b = closure(toy, b_set);
            if (!std::includes(cl_b.begin(), cl_b.end(), cl_a.begin(), cl_a.end()))
                return fail("closure is not monotone");
        }
        if (closure(toy, cl_a) != cl_a) return fail("closure is not idempotent");
        for (int a = 0; a < u; ++a) {
            std::set<int> with_a = a_set;
            with_a.insert(a);
            std::set<int> cl_with_a = closure(toy, with_a);
            for (int b = 0; b < u; ++b) {
                if (!cl_with_a.count(b) || cl_a.count(b)) continue;
                std::set<int> with_b = a_set;
                with_b.insert(b);
                if (!closure(toy, with_b).count(a)) {
                    std::ostringstream why;
                    why << "exchange failed at a=" << a << " b=" << b;
                    return fail(why.str());
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace eactest
