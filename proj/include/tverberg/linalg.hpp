#ifndef TVERBERG_LINALG_HPP
#define TVERBERG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

/** Dense row-major rational matrix; rows may be empty only when cols() == 0. */
using Matrix = std::vector<Vector>;

/** Reduced row echelon form in place, pivoting only in the first `cols` columns; row operations act on whole rows. Returns the pivot columns. */
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols);

std::size_t rank(Matrix m, std::size_t cols);

/** Basis of { x : m x = 0 }. */
Matrix nullspace(Matrix m, std::size_t cols);

/** Unique solution of a square nonsingular system, or nullopt if singular. */
std::optional<Vector> solve_square(Matrix a, Vector b);

Rational determinant(Matrix a);

} // namespace tverberg

#endif
