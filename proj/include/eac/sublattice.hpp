// Bounded enumeration of rational row spaces, one canonical (saturated
// HNF) representative each. This is what turns the "for any k independent
// integer vectors" quantifier into a finite, height-tagged check.
#pragma once

#include <vector>

#include "eac/intmatrix.hpp"

namespace eac {

/// A rank-k rational subspace of Q^n, carried by the row Hermite basis of
/// its saturated integer lattice. The HNF basis is the canonical
/// representative: equal spans compare equal.
struct Sublattice {
    IntMatrix basis;
    int rank = 0;
    Integer height;               ///< max |entry| of the HNF basis
    bool coordinate_axes = false; ///< spanned by standard basis vectors
    std::vector<int> axes;        ///< the axis indices, when coordinate_axes

    static Sublattice from_rows(const IntMatrix& rows);
    bool operator==(const Sublattice& other) const { return basis == other.basis; }
};

/// All primitive vectors of Z^n with entries in [-h, h], one per
/// projective class (first nonzero entry positive), sorted by height then
/// lexicographically.
std::vector<std::vector<Integer>> primitive_vectors(int n, int h);

/// Every rank-k rational row space of Q^n admitting a basis with entries
/// in [-h, h], exactly once. Coordinate-axis subspaces come first (in
/// lexicographic subset order), the rest sorted by basis height, then
/// entries. k == n is the single full space.
std::vector<Sublattice> enumerate_sublattices(int n, int k, int h);

} // namespace eac
