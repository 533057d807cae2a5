#include "delpezzo/qlinalg.hpp"

#include <utility>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(MatQ& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (size_t j = col; j < cols; ++j)
            m[row][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

} // namespace

int rank(MatQ m) {
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> kernel(MatQ m) {
    if (m.empty())
        return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m[k][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int det(MatZ m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw DimensionMismatchError("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0)
                ++sel;
            if (sel == n)
                return 0;
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace delpezzo
