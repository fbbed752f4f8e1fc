/**
 * Reduced simplicial homology from exact boundary matrices.
 */
#ifndef TVERBERG_HOMOLOGY_HPP
#define TVERBERG_HOMOLOGY_HPP

#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/**
 * Reduced homology H̃_q for q = -1, 0, ..., dim K. betti[q+1] is the rank
 * (over Q for integer coefficients, over Z/p otherwise) and torsion[q+1]
 * the invariant factors > 1 of H̃_q (integer coefficients only).
 */
struct HomologyResult
{
    /// 0 for the integers, otherwise the prime p.
    int modulus = 0;
    std::vector<long> betti;
    std::vector<std::vector<Integer>> torsion;

    bool operator==(const HomologyResult&) const = default;
};

/// Nonzero diagonal of the Smith normal form, in divisibility order.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a);

/// Rank of an integer matrix reduced modulo the prime p.
std::size_t rank_mod_p(const std::vector<std::vector<Integer>>& a, int p);

/// `modulus` 0 computes over Z with Smith normal form; a prime p computes over Z/p.
HomologyResult homology(const SimplicialComplex& k, int modulus = 0);

/// True iff the result is the reduced homology of S^n over its coefficients.
bool is_homology_sphere(const HomologyResult& h, int n);

} // namespace tverberg

#endif
