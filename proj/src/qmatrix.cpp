#include "eac/qmatrix.hpp"

#include <sstream>

namespace eac {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row, QRow{});
    return pivots;
}

int rank(QMatrix m) {
    return static_cast<int>(rref(m).size());
}

QMatrix kernel_basis(const QMatrix& m, int ncols) {
    QMatrix a = m;
    for (auto& r : a) r.resize(ncols, Rational(0));
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;

    QMatrix basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QRow v(ncols, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const QRow& v, QMatrix m) {
    int r0 = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == r0;
}

std::string span_key(QMatrix m) {
    rref(m);
    std::ostringstream out;
    for (const auto& row : m) {
        for (const auto& c : row) out << to_string(c) << ",";
        out << ";";
    }
    return out.str();
}

std::vector<Integer> primitive_integer(const QRow& v) {
    Integer scale = 1;
    for (const auto& q : v) scale = lcm(scale, q.get_den());
    std::vector<Integer> r;
    r.reserve(v.size());
    Integer content = 0;
    for (const auto& q : v) {
        Integer e = q.get_num() * (scale / q.get_den());
        content = gcd(content, e);
        r.push_back(e);
    }
    if (content == 0) return r;
    int sign = 0;
    for (auto& e : r) {
        e /= content;
        if (sign == 0 && e != 0) sign = (e > 0) ? 1 : -1;
    }
    if (sign < 0)
        for (auto& e : r) e = -e;
    return r;
}

} // namespace eac
