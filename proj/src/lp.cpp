#include "tverberg/lp.hpp"

#include <stdexcept>

namespace tverberg {

FeasibilityResult find_feasible_point(const Matrix& a, const Vector& b, std::size_t cols)
{
    const std::size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("find_feasible_point: rhs length mismatch");
    const std::size_t n = cols;
    const std::size_t rhs = n;

    // Tableau over original columns plus the rhs; artificial columns are
    // implicit because an artificial never re-enters once it has left.
    Matrix t(m, Vector(n + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        if (a[i].size() != n)
            throw std::invalid_argument("find_feasible_point: ragged matrix");
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][rhs] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    Vector z(n + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (t[i][j] != 0)
                z[j] -= t[i][j];

    FeasibilityResult result;
    while (true)
    {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j)
        {
            if (z[j] < 0)
            {
                enter = j;
                break;
            }
        }
        if (enter == n)
            break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave]))
            {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        // The phase-one objective is bounded below by zero, so some row
        // always blocks an improving column.
        if (leave == m)
            throw std::logic_error("find_feasible_point: unbounded phase-one ray");

        const Rational inv = 1 / t[leave][enter];
        for (std::size_t j = 0; j <= n; ++j)
            if (t[leave][j] != 0)
                t[leave][j] *= inv;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0)
        {
            const Rational f = z[enter];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[leave][j] != 0)
                    z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    // z[rhs] is minus the phase-one objective value.
    if (z[rhs] != 0)
        return result;

    Vector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][rhs];
    result.solution = std::move(x);
    return result;
}

} // namespace tverberg
