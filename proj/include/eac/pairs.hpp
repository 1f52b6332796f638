// The pair calculus: normality and freeness of a variety pair (the
// qualifier for axiom-schema instances), reduction of punctured pairs to
// plain ones, generic hyperplane cuts, associated root sequences with
// their root-of-unity action, and the certified lower bound for the
// pseudo-analytic dimension of the solution set.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eac/cyclotomic.hpp"
#include "eac/ideal.hpp"
#include "eac/sublattice.hpp"

namespace eac {

/// A pair of varieties in matching ambient dimension: V constrains the
/// points, W their exponential images. W is required to meet the torus
/// (images live in the multiplicative group), both ideals proper.
/// Irreducibility is an assumption recorded by the caller, never
/// computed.
class VarietyPair {
public:
    VarietyPair(Ideal variety_x, Ideal variety_y,
                bool assume_x_irreducible = false, bool assume_y_irreducible = false);

    int n() const;
    const Ideal& variety_x() const { return vx_; }
    const Ideal& variety_y() const { return vy_; }
    /// Closure of the torus part of W (computed once at construction).
    const Ideal& variety_y_torus_closure() const { return vy_sat_; }
    bool x_irreducible_assumed() const { return x_irred_; }
    bool y_irreducible_assumed() const { return y_irred_; }

    int dim_x() const;
    int dim_y() const;

    /// Hyperplane polynomials adjoined by cut steps. Their coefficients
    /// stand in for parameters transcendental over the base field, so the
    /// additive freeness check treats relations they span as parameter
    /// relations, not genuine integer dependencies.
    const std::vector<Polynomial>& cut_params_x() const { return cut_params_x_; }
    const std::vector<Polynomial>& cut_params_y() const { return cut_params_y_; }

    VarietyPair with_cut_x(Polynomial hyperplane) const;
    VarietyPair with_cut_y(Polynomial hyperplane) const;

private:
    Ideal vx_, vy_, vy_sat_;
    bool x_irred_ = false, y_irred_ = false;
    std::vector<Polynomial> cut_params_x_, cut_params_y_;
};

/// A dependency witness: the integer vector m and the scalar c of the
/// relation (additive: m.x = c; multiplicative: y^m = c).
struct DependencyWitness {
    std::vector<Integer> m;
    Rational c;
    std::string str(const RingPtr& ring, bool multiplicative) const;
};

struct AdditiveVerdict {
    bool free = true;
    std::optional<DependencyWitness> witness;
};

struct MultiplicativeVerdict {
    bool free = true;
    int height = 0;
    std::optional<DependencyWitness> witness;
};

struct NormalityWitness {
    Sublattice lattice;
    int dim_x = 0, dim_y = 0, k = 0;
};

struct NormalityVerdict {
    bool normal = true;
    int height = 0;
    std::optional<NormalityWitness> witness;
};

/// Free iff no affine-linear member of the x-ideal has a nonzero
/// variable part, modulo the span of the cut parameter hyperplanes.
AdditiveVerdict additive_free(const VarietyPair& pair);

/// For one primitive integer vector m per projective class up to the
/// height bound: dependent iff NF(y^(m+)) is a scalar multiple of
/// NF(y^(m-)) modulo the y-ideal. A Free verdict holds up to the bound
/// only.
MultiplicativeVerdict multiplicative_free(const VarietyPair& pair, int height);

/// For every enumerated sublattice of every rank, the dimensions of the
/// linear image of V and the monomial image of W must sum to at least the
/// rank. Coordinate projections are checked first; the first failing
/// lattice in enumeration order is the witness.
NormalityVerdict normal_check(const VarietyPair& pair, int height);

struct AxiomReport {
    AdditiveVerdict additive;
    MultiplicativeVerdict multiplicative;
    NormalityVerdict normality;
    bool x_irreducible_assumed = false;
    bool y_irreducible_assumed = false;
    bool qualifies = false; ///< all checks pass and both flags are set
};

/// Whether the pair qualifies as an instance of the solvability axiom
/// schema at the given height bound.
AxiomReport axiom_instance(const VarietyPair& pair, int height);

struct ReduceResult {
    bool ok = false;
    std::optional<VarietyPair> pair;  ///< the constructed pair, when one exists
    int k = 0;                        ///< exponent used on the x-side identity
    int added_x = 0, added_y = 0;     ///< fresh variables per side
    std::vector<Polynomial> fs, gs;   ///< removal polynomials actually used
    AdditiveVerdict additive;         ///< verification of the output
    MultiplicativeVerdict multiplicative;
    std::string obstruction;          ///< set when !ok
};

/// Turns the punctured pair (V minus V', W minus W') into a plain pair in
/// more variables: a point lies in the punctured sets iff it extends to a
/// point of the output. The x-side identity is f * s^k = 1 with k
/// escalated until the output verifies additively free (up to k_cap);
/// the y-side uses g * s = 1. Multi-generator removals go through an
/// auxiliary free coordinate t and the combined polynomial sum_i f_i t^(i-1).
ReduceResult reduce(const VarietyPair& pair,
                    const std::optional<Ideal>& x_remove,
                    const std::optional<Ideal>& y_remove,
                    int height, int k_cap);

struct CutReport {
    bool ok = false;
    char side = 'V';                   ///< which variety was cut
    std::vector<Rational> coefficients; ///< the drawn hyperplane data
    int dim_x_before = 0, dim_x_after = 0;
    int dim_y_before = 0, dim_y_after = 0;
    int d_before = 0, d_after = 0;
    AdditiveVerdict additive;
    MultiplicativeVerdict multiplicative;
    NormalityVerdict normality;
    std::string advice; ///< retry guidance when a generic draw failed
};

struct CutResult {
    std::optional<VarietyPair> pair; ///< present whenever the cut ideal was formed
    CutReport report;
};

/// Intersects V with a pseudo-random rational hyperplane c.x = 1 (the
/// coefficients stand in for algebraically independent scalars), dropping
/// dim V by one and d by one. When dim V is already 1 and W fills the
/// torus, the cut acts on W with y_1 + ... + y_n = c instead. Degenerate
/// draws are detected and reported for re-seeding, never silently kept.
CutResult cut(const VarietyPair& pair, std::uint64_t seed, int height);

/// The full preimage of W under coordinatewise l-th powers: every
/// generator g(y) becomes g(y^l). Component extraction is out of scope;
/// membership tests against this ideal are the supported use.
Ideal associated_preimage(const VarietyPair& pair, int l);

/// Coordinatewise product point * xi for l-th roots of unity xi.
/// Throws when some xi is not an l-th root.
std::vector<CycloElement> unity_action(const std::vector<CycloElement>& point,
                                       const std::vector<CycloElement>& xi, int level);

/// True when every generator vanishes at the cyclotomic point.
bool vanishes_at(const Ideal& ideal, const std::vector<CycloElement>& point);

struct AdimReport {
    int bound = 0; ///< dim V + dim W - n
    int dim_x = 0, dim_y = 0;
    std::vector<std::string> notes;
};

/// The certified lower bound dim V + dim W - n for the pseudo-analytic
/// dimension of the solution set of the pair. Requires a qualifying pair
/// at the given height (the bound is only asserted for normal free pairs).
AdimReport adim_bound(const VarietyPair& pair, int height);

} // namespace eac
