/**
 * Affine maps on the join [r]^{*(n+1)}, Bárány's colorful Carathéodory
 * pivoting, and the collapse of a Z/r-orbit to a single image point.
 */
#ifndef TVERBERG_ORBIT_HPP
#define TVERBERG_ORBIT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

/**
 * An affine map [r]^{*(n+1)} -> Q^d given by its values on the r(n+1)
 * vertices. Vertex (column j, symbol a) has value values[j*r + a-1].
 */
struct AffineJoinMap
{
    int r = 2;
    int n = 0;
    int d = 1;
    std::vector<Vector> values;

    const Vector& value(int column, int symbol) const;
};

/**
 * x = Σ λ_j (j, symbol_j). The generator t of Z/r sends symbol a to a+1
 * modulo r in every column.
 */
struct JoinPoint
{
    Vector lambda;
    std::vector<int> symbol;
};

/// t^k · x.
JoinPoint shift(const JoinPoint& x, int r, int k = 1);

/// f(x); throws unless λ is a convex weight vector and symbols lie in 1..r.
Vector evaluate(const AffineJoinMap& f, const JoinPoint& x);

/**
 * One point per set with 0 in the convex hull of the selection.
 * coefficients[i] is the weight of sets[i][choice[i]]. potentials holds
 * the squared norm of the nearest point of each visited transversal hull;
 * it strictly decreases and ends at 0.
 */
struct ColorfulSelection
{
    std::vector<std::size_t> choice;
    Vector coefficients;
    std::size_t pivots = 0;
    std::vector<Rational> potentials;
};

/**
 * d+1 point sets in Q^d, each with 0 in its convex hull. Starts from the
 * first point of every set; while the nearest point p of the transversal
 * hull is nonzero, the lowest-index set whose point carries zero weight in
 * p is switched to its point minimising <x, p> (lowest index on ties).
 * Throws InvalidInput when some set does not capture 0.
 */
ColorfulSelection colorful_caratheodory(const std::vector<std::vector<Vector>>& sets);

/// Nearest point to 0 of conv(points) with its convex weights.
std::pair<Vector, Vector> nearest_point_to_origin(const std::vector<Vector>& points);

struct OrbitCollapse
{
    JoinPoint point;
    /// The common value f(x) = f(t·x) = ... = f(t^{r-1}·x).
    Vector image;
    std::size_t pivots = 0;
};

/**
 * Finds x with f(t^k·x) equal for all k. Needs n >= (r-1)d; only the first
 * (r-1)d+1 columns are used, the others get weight 0 and symbol 1. The
 * result is re-evaluated exactly before it is returned.
 */
OrbitCollapse collapse_orbit(const AffineJoinMap& f);

/// Values p/q with 1 <= q <= bound and |p| <= bound q, from a SplitMix64 stream.
AffineJoinMap random_affine_join_map(int r, int n, int d, std::uint64_t seed, std::int64_t bound = 16);

} // namespace tverberg

#endif
