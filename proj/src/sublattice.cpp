#include "eac/sublattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eac/errors.hpp"

namespace eac {

namespace {

bool detect_axes(const IntMatrix& basis, std::vector<int>& axes) {
    axes.clear();
    for (int i = 0; i < basis.rows(); ++i) {
        int hit = -1;
        for (int j = 0; j < basis.cols(); ++j) {
            const Integer& e = basis.at(i, j);
            if (e == 0) continue;
            if (e != 1 || hit >= 0) return false;
            hit = j;
        }
        if (hit < 0) return false;
        axes.push_back(hit);
    }
    return true;
}

std::vector<Integer> matrix_key(const IntMatrix& m) {
    std::vector<Integer> key;
    key.reserve(size_t(m.rows()) * m.cols() + 2);
    key.push_back(m.rows());
    key.push_back(m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j));
    return key;
}

} // namespace

Sublattice Sublattice::from_rows(const IntMatrix& rows) {
    Sublattice s;
    s.basis = saturate_rows(rows);
    s.rank = s.basis.rows();
    s.height = s.basis.height();
    s.coordinate_axes = detect_axes(s.basis, s.axes);
    return s;
}

std::vector<std::vector<Integer>> primitive_vectors(int n, int h) {
    if (n < 1 || h < 1)
        throw PreconditionError("primitive_vectors: need n >= 1 and height >= 1");
    std::vector<std::vector<Integer>> out;
    std::vector<long> v(n, -h);
    // Odometer over [-h, h]^n.
    while (true) {
        long first_nonzero = 0;
        long content = 0;
        for (long e : v) {
            if (e != 0 && first_nonzero == 0) first_nonzero = e;
            content = std::gcd(content, std::abs(e));
        }
        if (first_nonzero > 0 && content == 1) {
            std::vector<Integer> row(n);
            for (int i = 0; i < n; ++i) row[i] = v[i];
            out.push_back(std::move(row));
        }
        int pos = n - 1;
        while (pos >= 0 && v[pos] == h) v[pos--] = -h;
        if (pos < 0) break;
        ++v[pos];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Integer ha = 0, hb = 0;
        for (const auto& e : a) { Integer v = abs(e); if (v > ha) ha = v; }
        for (const auto& e : b) { Integer v = abs(e); if (v > hb) hb = v; }
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

std::vector<Sublattice> enumerate_sublattices(int n, int k, int h) {
    if (k < 1 || k > n)
        throw PreconditionError("enumerate_sublattices: need 1 <= k <= n");
    if (h < 1)
        throw PreconditionError("enumerate_sublattices: height bound must be >= 1");

    if (k == n) {
        Sublattice full = Sublattice::from_rows(IntMatrix::identity(n));
        return {full};
    }

    std::vector<std::vector<Integer>> pool = primitive_vectors(n, h);
    std::map<std::vector<Integer>, Sublattice> seen;

    std::vector<int> choice(k);
    // All k-subsets of the pool; a rank-k space with a height-h basis has
    // one made of pairwise non-proportional primitive pool vectors.
    auto emit = [&](const std::vector<int>& pick) {
        IntMatrix rows(0, n);
        for (int idx : pick) rows.append_row(pool[idx]);
        if (rank_q(rows) != k) return;
        Sublattice s = Sublattice::from_rows(rows);
        seen.emplace(matrix_key(s.basis), std::move(s));
    };
    // Iterative combination enumeration.
    for (int i = 0; i < k; ++i) choice[i] = i;
    if (static_cast<int>(pool.size()) >= k) {
        while (true) {
            emit(choice);
            int pos = k - 1;
            while (pos >= 0 && choice[pos] == static_cast<int>(pool.size()) - k + pos) --pos;
            if (pos < 0) break;
            ++choice[pos];
            for (int i = pos + 1; i < k; ++i) choice[i] = choice[i - 1] + 1;
        }
    }

    std::vector<Sublattice> axes_first;
    std::vector<Sublattice> rest;
    for (auto& [key, s] : seen)
        (s.coordinate_axes ? axes_first : rest).push_back(std::move(s));
    std::sort(axes_first.begin(), axes_first.end(),
              [](const Sublattice& a, const Sublattice& b) { return a.axes < b.axes; });
    std::sort(rest.begin(), rest.end(), [](const Sublattice& a, const Sublattice& b) {
        if (a.height != b.height) return a.height < b.height;
        return matrix_key(a.basis) < matrix_key(b.basis);
    });
    axes_first.insert(axes_first.end(), std::make_move_iterator(rest.begin()),
                      std::make_move_iterator(rest.end()));
    return axes_first;
}

} // namespace eac
