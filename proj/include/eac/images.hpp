// Images of varieties under integer matrices: linear on the additive
// side, monomial on the multiplicative side. Both return the ideal of
// the Zariski closure of the image.
#pragma once

#include "eac/ideal.hpp"
#include "eac/intmatrix.hpp"

namespace eac {

/// Closure of the image of V(I) under x -> M x, as an ideal in k fresh
/// variables (named prefix1..prefixk).
Ideal lin_image(const Ideal& ideal, const IntMatrix& m, const std::string& prefix = "a");

/// Closure of the image of the torus part of V(I) under the monomial map
/// y -> y^M (rows of M are exponent vectors; negative entries act through
/// adjoined inverses). Throws PreconditionError when V(I) misses the
/// torus entirely.
///
/// When the caller knows V(I) already equals the closure of its torus
/// part (I saturated), `source_torus_closed` skips the inverses of
/// variables that only occur with non-negative exponents; the image
/// closure is unchanged.
Ideal mono_image(const Ideal& ideal, const IntMatrix& m, const std::string& prefix = "b",
                 bool source_torus_closed = false);

} // namespace eac
