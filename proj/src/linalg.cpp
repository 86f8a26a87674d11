#include "realrank/linalg.hpp"

#include <stdexcept>

namespace realrank {

Rational determinant(MatQ m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::vector<int> rref(MatQ& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<VecQ> kernel_basis(const MatQ& m, int cols) {
    MatQ a = m;
    for (auto& row : a) row.resize(static_cast<size_t>(cols), Rational(0));
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<VecQ> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        VecQ v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free)] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a[r][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(MatQ m) {
    return static_cast<int>(rref(m).size());
}

std::optional<std::vector<Interval>> interval_solve(std::vector<std::vector<Interval>> m,
                                                    std::vector<Interval> b) {
    size_t n = m.size();
    if (b.size() != n) throw std::invalid_argument("interval_solve: size mismatch");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t col = 0; col < n; ++col) {
        // Pick the sign-definite pivot with the largest magnitude midpoint.
        size_t best = n;
        Rational best_mag(0);
        for (size_t r = col; r < n; ++r) {
            const Interval& p = m[r][col];
            if (p.contains_zero()) continue;
            Rational mag = p.mid().abs();
            if (best == n || mag > best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        if (best == n) return std::nullopt;
        std::swap(m[best], m[col]);
        std::swap(b[best], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            auto f = checked_div(m[r][col], m[col][col]);
            if (!f) return std::nullopt;
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - *f * m[col][c];
            b[r] = b[r] - *f * b[col];
        }
    }
    std::vector<Interval> x(n);
    for (size_t i = n; i-- > 0;) {
        Interval acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * x[j];
        auto xi = checked_div(acc, m[i][i]);
        if (!xi) return std::nullopt;
        x[i] = *xi;
    }
    return x;
}

}  // namespace realrank
