/**
 * Backtracking shellability search for small pure complexes.
 */
#ifndef TVERBERG_SHELLABILITY_HPP
#define TVERBERG_SHELLABILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tverberg/complex.hpp"

namespace tverberg {

enum class ShellStatus
{
    shellable,
    not_shellable,
    inconclusive,
};

std::string to_string(ShellStatus s);

/**
 * `order` holds facet indices (into K.facets()) of a shelling when
 * shellable. not_shellable means every facet set reachable by valid
 * extensions was explored and none covers K.
 */
struct ShellabilityResult
{
    ShellStatus status = ShellStatus::inconclusive;
    std::vector<std::size_t> order;
    std::uint64_t states = 0;
};

/**
 * F may follow the facets P when P is empty or F ∩ (∪P) is a nonempty
 * union of codimension-one faces of F: for every G in P some H in P has
 * F ∩ G ⊆ F ∩ H with |F ∩ H| = |F| - 1. Facet sets that cannot be
 * completed are memoised. At most 64 facets; throws InvalidInput for a
 * non-pure complex.
 */
ShellabilityResult is_shellable(const SimplicialComplex& k, std::uint64_t budget = 1'000'000);

} // namespace tverberg

#endif
