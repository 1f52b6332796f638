#include "eac/intmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "eac/errors.hpp"

namespace eac {

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw PreconditionError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw PreconditionError("matrix product shape mismatch");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) += at(i, k) * other.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Integer> IntMatrix::row(int i) const {
    std::vector<Integer> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_)
        throw PreconditionError("appended row has wrong width");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Integer IntMatrix::height() const {
    Integer h = 0;
    for (const auto& e : a_) {
        Integer a = abs(e);
        if (a > h) h = a;
    }
    return h;
}

Integer IntMatrix::det() const {
    if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix m(*this);
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << to_string(at(i, j));
    }
    out << "]";
    return out.str();
}

HnfResult hnf(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);

    auto row_sub = [&](int dst, int src, const Integer& q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) h.at(dst, j) -= q * h.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto row_negate = [&](int r) {
        for (int j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
        for (int j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    };

    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean elimination within this column below pivot_row.
        while (true) {
            int best = -1;
            for (int i = pivot_row; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best < 0 || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best < 0) break;
            row_swap(pivot_row, best);
            bool clean = true;
            for (int i = pivot_row + 1; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Integer q = fdiv(h.at(i, col), h.at(pivot_row, col));
                row_sub(i, pivot_row, q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) row_negate(pivot_row);
        for (int i = 0; i < pivot_row; ++i) {
            Integer q = fdiv(h.at(i, col), h.at(pivot_row, col));
            row_sub(i, pivot_row, q);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto row_sub = [&](int dst, int src, const Integer& q) {
        for (int j = 0; j < cols; ++j) s.at(dst, j) -= q * s.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto col_sub = [&](int dst, int src, const Integer& q) {
        for (int i = 0; i < rows; ++i) s.at(i, dst) -= q * s.at(i, src);
        for (int i = 0; i < cols; ++i) v.at(i, dst) -= q * v.at(i, src);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };

    int t = 0;
    int bound = std::min(rows, cols);
    while (t < bound) {
        // Locate a nonzero entry in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (s.at(i, j) != 0 &&
                    (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (s.at(i, t) == 0) continue;
                Integer q = fdiv(s.at(i, t), s.at(t, t));
                row_sub(i, t, q);
                if (s.at(i, t) != 0) { row_swap(t, i); dirty = true; }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.at(t, j) == 0) continue;
                Integer q = fdiv(s.at(t, j), s.at(t, t));
                col_sub(j, t, q);
                if (s.at(t, j) != 0) { col_swap(t, j); dirty = true; }
            }
        }

        // Divisibility: fold any non-multiple into the pivot and restart.
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i)
            for (int j = t + 1; j < cols && !restart; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    for (int c2 = 0; c2 < cols; ++c2) s.at(t, c2) += s.at(i, c2);
                    for (int c2 = 0; c2 < rows; ++c2) u.at(t, c2) += u.at(i, c2);
                    restart = true;
                }
        if (restart) continue;

        if (s.at(t, t) < 0) {
            for (int j = 0; j < cols; ++j) s.at(t, j) = -s.at(t, j);
            for (int j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
        }
        ++t;
    }

    std::vector<Integer> divisors(bound, Integer(0));
    for (int i = 0; i < t; ++i) divisors[i] = s.at(i, i);
    return {std::move(divisors), std::move(u), std::move(v)};
}

int rank_q(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    int r = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    return r;
}

IntMatrix right_kernel(const IntMatrix& m) {
    // Rows of U paired with zero rows of hnf(m^T) span the kernel.
    IntMatrix bt = m.transpose();
    HnfResult hr = hnf(bt);
    IntMatrix kernel(0, m.cols());
    for (int i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < hr.h.cols(); ++j)
            if (hr.h.at(i, j) != 0) { zero = false; break; }
        if (zero) kernel.append_row(hr.u.row(i));
    }
    return kernel;
}

IntMatrix saturate_rows(const IntMatrix& m) {
    IntMatrix k = right_kernel(m);
    IntMatrix s = right_kernel(k);
    IntMatrix h = hnf(s).h;
    // Drop trailing zero rows (there are none when s has full rank, but
    // keep the output canonical regardless).
    IntMatrix out(0, h.cols());
    for (int i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { zero = false; break; }
        if (!zero) out.append_row(h.row(i));
    }
    return out;
}

} // namespace eac
