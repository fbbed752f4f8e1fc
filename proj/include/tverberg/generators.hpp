#ifndef TVERBERG_GENERATORS_HPP
#define TVERBERG_GENERATORS_HPP

#include <cstdint>

#include "tverberg/exact_geometry.hpp"

namespace tverberg {

/**
 * Points γ(t_i) = (t_i, t_i^2, ..., t_i^d) for pairwise distinct parameters.
 *
 * Only the plain moment curve is provided. Rapidly growing parameters give
 * configurations that behave like a stretched curve for small instances.
 */
PointConfiguration moment_curve_points(int d, const Vector& params);

/// Moment curve at t = 1, 2, ..., n.
PointConfiguration moment_curve_points(int d, int n);

struct RandomConfigOptions
{
    std::int64_t denominator_bound = 64;
    int max_retries = 100;
};

/**
 * N points with coordinates p/q, 1 <= q <= B and |p| <= B q, drawn from a
 * SplitMix64 stream seeded with `seed`. Configurations that fail
 * in_general_position are redrawn from the continuing stream; throws
 * RetriesExhausted after max_retries redraws.
 */
PointConfiguration random_rational_config(int n, int d, std::uint64_t seed, const RandomConfigOptions& options = {});

} // namespace tverberg

#endif
