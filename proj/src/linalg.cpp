#include "tverberg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tverberg {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col)
    {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        const std::size_t width = m[row].size();
        for (std::size_t j = col; j < width; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (i == row || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < width; ++j)
            {
                if (m[row][j] != 0)
                    m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m, std::size_t cols)
{
    return row_reduce(m, cols).size();
}

Matrix nullspace(Matrix m, std::size_t cols)
{
    const auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free)
    {
        if (is_pivot[free])
            continue;
        Vector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_square(Matrix a, Vector b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_square: shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
    {
        if (a[i].size() != n)
            throw std::invalid_argument("solve_square: matrix not square");
        a[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(a, n);
    if (pivots.size() < n)
        return std::nullopt;
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n];
    return x;
}

Rational determinant(Matrix a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t p = col;
        while (p < n && a[p][col] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col)
        {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i)
        {
            if (a[i][col] == 0)
                continue;
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace tverberg
