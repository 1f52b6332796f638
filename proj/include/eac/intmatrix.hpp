// Dense integer matrices with the normal forms needed for lattice work:
// row Hermite form with transform, Smith elementary divisors, integer
// kernels and row-lattice saturation.
#pragma once

#include <vector>

#include "eac/rational.hpp"

namespace eac {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Integer(0)) {}
    IntMatrix(int rows, int cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& other) const = default;

    std::vector<Integer> row(int i) const;
    void append_row(const std::vector<Integer>& r);

    /// Max absolute entry.
    Integer height() const;
    /// Exact determinant (square matrices), by fraction-free elimination.
    Integer det() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

struct HnfResult {
    IntMatrix h; ///< row Hermite normal form: h = u * m
    IntMatrix u; ///< unimodular transform
};

/// Row-style Hermite form: pivots positive, entries above a pivot reduced
/// into [0, pivot), zero rows at the bottom.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    std::vector<Integer> divisors; ///< d1 | d2 | ..., padded with 0 up to min(rows, cols)
    IntMatrix u, v;                ///< u * m * v = diag(divisors)
};

SnfResult snf(const IntMatrix& m);

/// Rank over Q.
int rank_q(const IntMatrix& m);

/// Rows form a basis of the full integer kernel { x : m * x = 0 }
/// (a saturated lattice).
IntMatrix right_kernel(const IntMatrix& m);

/// Canonical basis (HNF) of the saturation of the row lattice: the
/// intersection of the rational row span with the integer lattice. Equal
/// rational row spaces yield identical results.
IntMatrix saturate_rows(const IntMatrix& m);

} // namespace eac
