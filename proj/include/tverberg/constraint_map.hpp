/**
 * The equivariant constraint map Φ on the barycentric subdivision of the
 * deleted join (Δ_N)^{*r}_Δ, and its exhaustive zero-set verification.
 */
#ifndef TVERBERG_CONSTRAINT_MAP_HPP
#define TVERBERG_CONSTRAINT_MAP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/partitions.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// σ_1 * ... * σ_r over the vertex labels 1..N+1; components may be empty.
struct JoinFace
{
    std::vector<IndexSet> components;

    bool operator==(const JoinFace&) const = default;
};

/// Componentwise inclusion.
bool join_face_subset(const JoinFace& a, const JoinFace& b);

/// Membership in Σ_{N+1,r}^{d_1+1,...,d_r+1}: component sizes, sorted, bounded by d_i+1 sorted.
bool in_sigma(const JoinFace& face, const DimensionTuple& dims);

/**
 * 0 when the face lies in Σ; otherwise the index i (1-based) of the
 * lowest-dimensional component holding the smallest vertex label among
 * the lowest-dimensional components. When the lowest-dimensional
 * components are empty the smallest such index is used.
 */
int constraint_label(const JoinFace& face, const DimensionTuple& dims);

/// e_i minus the centroid (1/r, ..., 1/r): the image of label i in W_r; label 0 maps to 0.
Vector constraint_value(int label, int r);

using ConstraintLabeling = std::function<int(const JoinFace&)>;

/**
 * Outcome of verify_constraint_zero_set. On failure `violating_chain` is
 * a chain of join faces, strictly increasing by inclusion: a single face
 * when the labelling is zero off Σ or nonzero on Σ, or a chain whose
 * labels cover 1..r.
 */
struct ConstraintVerification
{
    bool passed = false;
    std::uint64_t faces = 0;
    std::uint64_t zero_faces = 0;
    std::string failure;
    std::vector<JoinFace> violating_chain;
    std::vector<int> chain_labels;
};

/**
 * Enumerates every nonempty join face of (Δ_N)^{*r}_Δ and checks that
 * the labelling vanishes exactly on Σ and that no inclusion chain carries
 * all r nonzero labels, so that the PL extension into W_r has no zeros off
 * sd(Σ). The default labelling is constraint_label. Throws BudgetExceeded
 * when (r+1)^{N+1} exceeds `budget`.
 */
ConstraintVerification verify_constraint_zero_set(int n, const DimensionTuple& dims,
                                                  const std::optional<ConstraintLabeling>& labeling = std::nullopt,
                                                  std::uint64_t budget = 20'000'000);

} // namespace tverberg

#endif
