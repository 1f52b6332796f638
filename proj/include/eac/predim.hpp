// Finite configurations and the predimension calculus: linear dimension
// over Q, transcendence degrees of a tuple and of its exponential image,
// delta, relative delta, strong extensions and the partial dimension.
//
// A configuration presents finitely many generators x_1..x_n of an
// additive structure together with a homomorphic image y_i of each under
// a formal exponential: locus_x carries the algebraic relations of the
// points, locus_y those of the images, lin_rels the Q-linear relations
// among the generators, and the kernel mask marks generators sent to 1.
//
// The infinite quantifiers ("for all finite subsets") are resolved by
// enumerating rational subspaces of the generator span up to a height
// bound. delta is invariant under change of spanning set, so one
// representative per subspace is enough; every verdict is tagged with
// the bound it was verified to.
//
// Configurations are immutable after construction and safe to share
// between threads; the internal memo tables are mutex-guarded.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eac/ideal.hpp"
#include "eac/intmatrix.hpp"

namespace eac {

/// A finite piece of the structure: either a plain subset of generators
/// or integer combination rows over all generators.
class SubsetSpec {
public:
    static SubsetSpec empty();
    static SubsetSpec subset(std::vector<int> indices);
    static SubsetSpec combinations(IntMatrix rows);

    bool is_subset() const { return is_subset_; }
    const std::vector<int>& indices() const { return indices_; }
    const IntMatrix& raw_rows() const { return rows_; }

    /// Combination rows in an n-generator configuration (unit rows for
    /// plain subsets).
    IntMatrix rows(int n) const;

    /// Stack of this spec's rows and another's.
    SubsetSpec unite(const SubsetSpec& other, int n) const;

    std::string str() const;

private:
    bool is_subset_ = true;
    std::vector<int> indices_;
    IntMatrix rows_;
};

struct StrongExtVerdict {
    bool strong = true;
    int height = 0;
    std::optional<SubsetSpec> witness; ///< a spec with delta(X/base) < 0
    int witness_delta = 0;
};

class Configuration {
public:
    /// Validates the presentation invariants and throws PreconditionError
    /// when they fail:
    ///   - locus_x and locus_y are proper and have matching variable counts;
    ///   - every linear-relation row vanishes on locus_x, and its
    ///     multiplicative counterpart y^(m+) - y^(m-) lies in locus_y
    ///     (the image of a vanishing combination is 1);
    ///   - kernel generators satisfy y_i - 1 in locus_y;
    ///   - locus_y meets the torus (images live in the multiplicative group).
    Configuration(Ideal locus_x, Ideal locus_y, IntMatrix lin_rels,
                  std::vector<bool> kernel_mask, int height_bound = 3,
                  std::vector<std::string> generator_names = {});

    int ngens() const;
    const Ideal& locus_x() const;
    const Ideal& locus_y() const;
    const IntMatrix& lin_rels() const;
    const std::vector<bool>& kernel_mask() const;
    int height_bound() const;
    const std::vector<std::string>& generator_names() const;

    /// Dimension of the Q-span of the spec's elements.
    int dim_q(const SubsetSpec& s) const;
    /// Transcendence degree of the tuple of elements, via the dimension
    /// of the closure of the linear image of locus_x.
    int trdeg_x(const SubsetSpec& s) const;
    /// Transcendence degree of the exponential images, via the monomial
    /// image of locus_y.
    int trdeg_y(const SubsetSpec& s) const;
    /// trdeg_x + trdeg_y - dim_q. Memoized per rational span.
    int delta(const SubsetSpec& s) const;

    /// delta(x | base) = delta(x u base) - delta(base), computed both as
    /// that difference and componentwise; disagreement raises
    /// InternalCheckError (it would mean an engine bug).
    int delta_rel(const SubsetSpec& x, const SubsetSpec& base) const;

    /// Checks delta(X/base) >= 0 for one spec per rational subspace of
    /// the generator span at the given height (restricted to subspaces of
    /// `within`'s span when provided).
    StrongExtVerdict strong_ext(const SubsetSpec& base, int height,
                                const std::optional<SubsetSpec>& within = std::nullopt) const;

    /// min delta(x u L) over enumerated span subspaces L (plus L empty)
    /// at the configuration's height bound or an explicit one.
    int partial_dim(const SubsetSpec& x) const;
    int partial_dim(const SubsetSpec& x, int height) const;

    /// One spec per rational subspace of the generator span generated by
    /// quotient vectors of height <= h; closed under joins. Does not
    /// include the zero subspace.
    std::vector<SubsetSpec> span_specs(int height) const;

    /// Canonical identifier of the spec's rational span (relations
    /// included); delta and partial_dim depend on the spec only through
    /// this value.
    std::string span_signature(const SubsetSpec& s) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// The standard-kernel toy structure on {pi, pi/2, ..., pi/size}: the
/// whole fragment spans one line, every image is a canonical primitive
/// root of unity, and delta vanishes on every subset (verified during
/// construction).
Configuration kernel_demo(int size, int height_bound = 3);

} // namespace eac
