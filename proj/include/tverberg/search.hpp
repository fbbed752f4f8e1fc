/**
 * Tverberg partition search over point configurations.
 */
#ifndef TVERBERG_SEARCH_HPP
#define TVERBERG_SEARCH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/exact_geometry.hpp"
#include "tverberg/partitions.hpp"

namespace tverberg {

enum class SearchStatus
{
    found,
    exhausted_none,
    budget_exhausted,
};

std::string to_string(SearchStatus s);

struct SearchStats
{
    std::uint64_t partitions_examined = 0;
    std::uint64_t lps_solved = 0;
};

/**
 * Result of a search. `found` carries both partition and witness;
 * `exhausted_none` is only reported after a complete enumeration.
 * `sampled` marks searches that drew random candidates instead of
 * enumerating, so a negative answer there is never a proof.
 */
struct SearchOutcome
{
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<IndexPartition> partition;
    std::optional<IntersectionWitness> witness;
    SearchStats stats;
    bool sampled = false;
};

struct SearchOptions
{
    /// Maximum number of candidates examined.
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    unsigned workers = 1;
};

/// Nondecreasing r-tuples of positive sizes with total <= n, in lexicographic order.
std::vector<std::vector<int>> size_profiles(int r, int n);

/**
 * First partition (in enumeration order) whose convex hulls share a point.
 * With `sizes` given only that profile is searched; otherwise every profile
 * from size_profiles(r, N) in order.
 */
SearchOutcome find_tverberg_partition(const PointConfiguration& config, int r,
                                      const std::optional<std::vector<int>>& sizes, const SearchOptions& options = {});

/// Complete enumeration of one profile; `exhausted_none` proves the profile does not occur.
SearchOutcome refute_occurrence(const PointConfiguration& config, int r, const std::vector<int>& sizes,
                                const SearchOptions& options = {});

} // namespace tverberg

#endif
