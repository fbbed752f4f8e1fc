#ifndef TVERBERG_LP_HPP
#define TVERBERG_LP_HPP

#include <cstddef>
#include <optional>

#include "tverberg/linalg.hpp"

namespace tverberg {

struct FeasibilityResult
{
    /// A point x >= 0 with A x = b, when one exists.
    std::optional<Vector> solution;
    std::size_t pivots = 0;
};

/**
 * Decide feasibility of { x >= 0 : A x = b } exactly.
 *
 * Phase one of the tableau simplex method: artificial variables on every
 * row, minimize their sum, Bland's smallest-index rule for both the entering
 * and the leaving variable so the method cannot cycle. The answer is exact;
 * a returned solution satisfies A x = b with zero residual.
 */
FeasibilityResult find_feasible_point(const Matrix& a, const Vector& b, std::size_t cols);

} // namespace tverberg

#endif
