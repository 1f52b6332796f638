// Exact linear algebra over Q: reduced row echelon form, rank, kernels
// and canonical row-space keys. Sizes here are tiny (generator counts),
// so plain Gaussian elimination over rationals is the right tool.
#pragma once

#include <string>
#include <vector>

#include "eac/rational.hpp"

namespace eac {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

/// Basis of { x : m * x = 0 }, one row per free column, in RREF-induced
/// canonical form.
QMatrix kernel_basis(const QMatrix& m, int ncols);

/// True when v lies in the row span of m.
bool in_row_span(const QRow& v, QMatrix m);

/// Canonical identifier of the row space (serialized RREF). Equal spans
/// give equal keys.
std::string span_key(QMatrix m);

/// Clears denominators and divides by the content: the unique primitive
/// integer vector with the same direction whose first nonzero entry is
/// positive. Zero vectors pass through.
std::vector<Integer> primitive_integer(const QRow& v);

} // namespace eac
