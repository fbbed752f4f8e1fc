/**
 * Maps Δ_N -> Q^d that are affine on the first barycentric subdivision, the
 * skeleton-distance counterexample map, and the search for r-fold
 * intersections among images of pairwise disjoint faces.
 */
#ifndef TVERBERG_PL_MAP_HPP
#define TVERBERG_PL_MAP_HPP

#include <cstdint>
#include <vector>

#include "tverberg/exact_geometry.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/search.hpp"

namespace tverberg {

/// Vertex subsets of Δ_N as bitmasks: bit i is vertex label i+1.
using FaceMask = std::uint64_t;

inline constexpr int max_pl_map_vertices = 24;

/**
 * A PL map is stored by its values at the barycenters of all nonempty faces
 * of Δ_N; these are the vertices of the barycentric subdivision.
 */
class PLMap
{
    public:
        PLMap(int n, int target_dim, std::vector<Vector> values);

        /// N, so the domain Δ_N has N+1 vertices.
        int n() const { return n_; }
        int target_dim() const { return target_dim_; }
        const Vector& value(FaceMask face) const;
        const std::vector<Vector>& values() const { return values_; }

        /// True iff the value at every subface barycenter of `face` is the mean of its vertex values.
        bool affine_on(FaceMask face) const;

    private:
        int n_;
        int target_dim_;
        std::vector<Vector> values_;
};

/// Labels of a face mask, increasing.
IndexSet face_labels(FaceMask face);
FaceMask face_mask(const IndexSet& labels);

/// The affine map Δ_N -> Q^d sending vertex i to point i of `g` (N+1 points).
PLMap affine_pl_map(const PointConfiguration& g);

/**
 * x -> (g(x), squared distance from x to the d1-skeleton), sampled at the
 * subdivision vertices and extended piecewise linearly.
 *
 * `g` must have N+1 points in Q^{d-1}; strong general position of g is the
 * caller's responsibility. The last coordinate vanishes exactly on faces of
 * dimension <= d1.
 */
PLMap build_counterexample_map(int n, int d, int d1, const PointConfiguration& g);

/**
 * Evaluates the PL extension at a barycentric point. Sorting the coordinates
 * x_{π1} >= x_{π2} >= ... selects the flag {π1} ⊂ {π1,π2} ⊂ ... whose
 * barycenters carry x with weights k (x_{πk} - x_{πk+1}).
 */
Vector evaluate_pl_map(const PLMap& f, const Vector& x);

struct MapSearchOptions
{
    std::uint64_t budget = 100000;
    unsigned workers = 1;
    std::uint64_t seed = 0;
};

/**
 * Searches r-tuples of pairwise disjoint faces with dim σ_i = dims_i for a
 * common point of f(σ_1), ..., f(σ_r). Exhausts the tuple space when it
 * holds at most `budget` tuples, otherwise samples `budget` tuples
 * (outcome.sampled). A tuple is decided exactly over all combinations of
 * subdivision cells; faces on which f is affine count as one cell, and cell
 * combinations are pruned by bounding boxes before any LP runs.
 *
 * The witness coefficients of part i are the barycentric coordinates of a
 * preimage x_i in σ_i, so that f(x_i) equals the witness point.
 */
SearchOutcome search_map_violation(const PLMap& f, int r, const DimensionTuple& dims,
                                   const MapSearchOptions& options = {});

/// Checks support, convexity and f(x_i) == point for every part.
bool verify_map_witness(const PLMap& f, const IndexPartition& faces, const IntersectionWitness& witness);

} // namespace tverberg

#endif
