// Polynomial ideals with cached reduced Groebner bases, and the derived
// machinery: normal forms, Krull dimension, elimination, unit saturation
// and extraction of affine-linear members.
//
// Membership here is ideal membership, not radical membership. All
// callers state their checks at the level of vanishing polynomials; on a
// non-radical input ideal a membership answer can differ from the
// geometric truth about the underlying point set.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "eac/order.hpp"
#include "eac/polynomial.hpp"

namespace eac {

/// Global bound on reduction steps per Groebner/normal-form computation.
/// Exceeding it raises ResourceLimitError, never a wrong answer.
long reduction_step_limit();
void set_reduction_step_limit(long limit);

/// dim = -1 iff the variety is empty (1 lies in the ideal); otherwise
/// dim equals the size of the witness, a maximum set of variables
/// independent modulo the leading-term ideal.
struct DimensionResult {
    int dim = 0;
    std::vector<int> witness;
};

/// Immutable generator list plus a per-order cache of reduced Groebner
/// bases. Cache fill is mutex-guarded: concurrent requests for the same
/// basis observe one canonical result. Copies share the cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const;
    const std::vector<Polynomial>& generators() const;
    int nvars() const { return ring() ? ring()->nvars() : 0; }

    /// The reduced Groebner basis, computed on demand and cached.
    const std::vector<Polynomial>& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool is_proper(const MonomialOrder& order = MonomialOrder::grevlex()) const;
    bool contains(const Polynomial& p, const MonomialOrder& order = MonomialOrder::grevlex()) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Reduced Groebner basis of the span of `gens`: monic, self-reduced,
/// sorted by decreasing leading monomial. Deterministic for fixed input
/// and order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order);

/// Unique remainder of p modulo the cached basis. Q-linear in p;
/// normal_form(p, I) == 0 iff p lies in I.
Polynomial normal_form(const Polynomial& p, const Ideal& ideal,
                       const MonomialOrder& order = MonomialOrder::grevlex());

/// Remainder modulo an explicit (not necessarily reduced) basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Krull dimension of the vanishing set, via maximum variable subsets
/// independent modulo the leading-term ideal.
DimensionResult dimension(const Ideal& ideal,
                          const MonomialOrder& order = MonomialOrder::grevlex());

/// I intersected with the subring on the kept variables, as an ideal of
/// the smaller ring; equals the ideal of the Zariski closure of the
/// coordinate projection.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& keep);

/// Ideal of the closure of V(I) minus the coordinate hyperplanes of the
/// listed variables: adjoin an inverse for each and eliminate it again.
Ideal saturate_units(const Ideal& ideal, const std::vector<int>& vars);

/// Basis of the affine-linear polynomials c0 + c1*x1 + ... + cn*xn in the
/// ideal, computed from the kernel of the (linear) normal-form map.
/// Vectors are scaled to primitive integer form. A basis element equal to
/// the constant 1 signals an improper ideal.
std::vector<Polynomial> linear_part(const Ideal& ideal);

} // namespace eac
