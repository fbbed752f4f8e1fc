/**
 * Exact point configurations, r-fold convex hull intersection by exact LP,
 * squared distance to skeleta of the standard simplex, and general-position
 * checkers. Every routine is a pure function of its arguments.
 */
#ifndef TVERBERG_EXACT_GEOMETRY_HPP
#define TVERBERG_EXACT_GEOMETRY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tverberg/linalg.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/** N >= 1 points of Q^dim, labeled 1..N in storage order. */
class PointConfiguration
{
    public:
        PointConfiguration(int dim, std::vector<Vector> points);

        int dim() const { return dim_; }
        int size() const { return static_cast<int>(points_.size()); }
        const Vector& point(int label) const { return points_.at(static_cast<std::size_t>(label - 1)); }
        const std::vector<Vector>& points() const { return points_; }

        bool operator==(const PointConfiguration&) const = default;

    private:
        int dim_;
        std::vector<Vector> points_;
};

/**
 * A common point of r convex hulls. coefficients[i] maps each label of part
 * i to its convex weight; the weighted sum of every part equals `point`.
 */
struct IntersectionWitness
{
    Vector point;
    std::vector<std::map<int, Rational>> coefficients;
};

/** Common point of the convex hulls of several finite point lists. */
struct HullIntersection
{
    Vector point;
    std::vector<Vector> weights;
    std::size_t pivots = 0;
};

/// Exact LP decision; hulls must be nonempty lists of points of length `dim`.
std::optional<HullIntersection> common_point(std::span<const std::vector<Vector>> hulls, std::size_t dim);

/**
 * Witness iff conv X_1 ∩ ... ∩ conv X_r is nonempty for the parts of
 * `partition`. Throws InvalidInput for an empty or overlapping part, or a
 * partition whose ground size is not the configuration size.
 */
std::optional<IntersectionWitness> convex_hulls_intersect(const PointConfiguration& config,
                                                          const IndexPartition& partition);

/// Recomputes every weighted sum; true iff all equal the witness point exactly.
bool verify_witness(const PointConfiguration& config, const IndexPartition& partition,
                    const IntersectionWitness& witness);

/// Nonnegative coordinates summing to one.
bool is_barycentric(const Vector& x);

/**
 * min over (k+1)-subsets S of the squared Euclidean distance from x to
 * conv{e_i : i in S} in the standard embedding of Δ_N in Q^{N+1}.
 *
 * The optimal face is spanned by the k+1 largest coordinates of x; the
 * distance is obtained by projecting x restricted to that face onto the
 * probability simplex (sort and threshold).
 */
Rational squared_distance_to_skeleton(const Vector& x, int k);

/// Sort-and-threshold Euclidean projection of v onto { y >= 0, sum y = 1 }.
Vector project_to_simplex(const Vector& v);

enum class PositionStatus
{
    holds,
    violated,
    inconclusive_budget_exhausted,
};

std::string to_string(PositionStatus s);

struct PositionVerdict
{
    PositionStatus status = PositionStatus::holds;
    /// Violating tuple of index sets (labels), present iff status == violated.
    std::vector<IndexSet> witness;
    std::size_t checked = 0;
    bool exhaustive = true;
};

/// Violated iff some (d+1)-subset (or, for N <= d, the whole set) is affinely dependent.
PositionVerdict in_general_position(const PointConfiguration& config);

/**
 * Checks that for r pairwise disjoint subsets of sizes 1..d+1 the
 * codimension of the intersection of their affine hulls equals
 * min(sum of codimensions, d+1), with codimension d+1 meaning empty.
 * Exhausts the tuple space when it holds at most `budget` tuples, otherwise
 * samples `budget` tuples from a SplitMix64 stream seeded with `seed`.
 */
PositionVerdict strong_general_position_check(const PointConfiguration& config, int r, std::size_t budget,
                                              std::uint64_t seed);

/// Codimension of the intersection of the affine hulls of the given label sets.
int affine_intersection_codimension(const PointConfiguration& config, const std::vector<IndexSet>& sets);

/**
 * CSV: a `dim=<d>` header line, then one point per line with comma separated
 * coordinates written as `p/q` or integers.
 */
std::string to_csv(const PointConfiguration& config);
PointConfiguration parse_csv(std::string_view text);
PointConfiguration read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const PointConfiguration& config);

} // namespace tverberg

#endif
