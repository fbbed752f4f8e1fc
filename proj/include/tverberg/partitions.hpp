/**
 * Index partitions, dimension tuples and the colorful-partition builder.
 *
 * Labels are 1-based throughout: a ground set of size n is {1, ..., n}.
 */
#ifndef TVERBERG_PARTITIONS_HPP
#define TVERBERG_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tverberg/random.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

using IndexSet = std::vector<int>;

/** r pairwise disjoint subsets of {1..ground_size}; each part kept sorted. */
struct IndexPartition
{
    int ground_size = 0;
    std::vector<IndexSet> parts;

    std::vector<int> sizes() const;
    bool operator==(const IndexPartition&) const = default;
};

/// Throws InvalidInput unless parts are sorted, in range, pairwise disjoint.
void validate_partition(const IndexPartition& p);

/**
 * Candidate face dimensions (d_1 <= ... <= d_r) for r-fold intersections in
 * dimension d.
 */
class DimensionTuple
{
    public:
        DimensionTuple(int r, int d, std::vector<int> dims);

        int r() const { return r_; }
        int d() const { return d_; }
        const std::vector<int>& dims() const { return dims_; }

        bool operator==(const DimensionTuple&) const = default;

    private:
        int r_;
        int d_;
        std::vector<int> dims_;
};

bool is_admissible(const DimensionTuple& t);
bool is_balanced(const DimensionTuple& t);

/// Every admissible tuple for (r, d), in lexicographic order.
std::vector<DimensionTuple> admissible_tuples(int r, int d);

/// The unique balanced tuple with Σ d_i = (r-1)d.
DimensionTuple balanced_tuple(int r, int d);

/// (r-1)(d-1)/r, the minimum face dimension any continuously forced tuple needs.
Rational continuous_lower_bound(int r, int d);

/** Y_k = {(r-1)(k-1)+1, ..., (r-1)k+1}, k = 1..d+1. */
std::vector<IndexSet> color_classes(int r, int d);

bool is_colorful(const IndexPartition& p, int r, int d);

struct ColorfulConstruction
{
    /// The split of {1..d} into A_1..A_r with |A_i| = d - d_i.
    std::vector<IndexSet> split;
    IndexPartition partition;
};

/**
 * Colorful partition of {1..(r-1)(d+1)+1} with part sizes d_i + 1.
 *
 * Odd integers of {1..d} are dealt to A_1, A_2, ... in order, then the even
 * ones; (r-1)k+1 goes to X_i for k in A_i, and the remaining points are
 * dealt in increasing order to the eligible parts in increasing index.
 * Throws InvalidInput for inadmissible tuples.
 */
ColorfulConstruction build_colorful_partition_traced(const DimensionTuple& t);
IndexPartition build_colorful_partition(const DimensionTuple& t);

/**
 * Lexicographic stream of partitions of sub-collections of `ground` into
 * parts of the given sizes. Among parts of equal size, minima increase
 * with the part index, so each unordered arrangement of equal-size parts is
 * produced once.
 */
class PartitionEnumerator
{
    public:
        PartitionEnumerator(IndexSet ground, std::vector<int> sizes, int ground_size = 0);

        std::optional<IndexPartition> next();

    private:
        struct Level
        {
            IndexSet pool;
            std::vector<std::size_t> pos;
        };

        bool init_level(std::size_t i);
        bool advance_level(std::size_t i);
        IndexSet pool_after(std::size_t i) const;
        int lower_bound_for(std::size_t i) const;

        IndexSet ground_;
        std::vector<int> sizes_;
        int ground_size_;
        std::vector<Level> levels_;
        bool started_ = false;
        bool done_ = false;
};

/// Collects the whole stream; convenient for small instances and tests.
std::vector<IndexPartition> enumerate_partitions(const IndexSet& ground, const std::vector<int>& sizes);

/// C(|ground|, n) * n! / (prod sizes! * prod multiplicities!), n = sum of sizes.
Integer count_partitions(std::size_t ground, const std::vector<int>& sizes);

/// A uniformly random arrangement with the enumerator's canonical ordering of equal-size parts.
IndexPartition sample_partition(const IndexSet& ground, const std::vector<int>& sizes, int ground_size,
                                SplitMix64& rng);

} // namespace tverberg

#endif
