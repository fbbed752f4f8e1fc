/**
 * Finite abstract simplicial complexes and the constructions built from
 * them: simplices, joins, deleted joins, (symmetric) multiple chessboard
 * complexes, barycentric subdivision and the circle join powers with their
 * Z/r action.
 */
#ifndef TVERBERG_COMPLEX_HPP
#define TVERBERG_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/partitions.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Strictly increasing vertex indices into SimplicialComplex::vertices().
using Face = std::vector<int>;

/**
 * Vertices carry string labels; faces refer to vertex indices. The facet
 * list is normalised on construction: faces sorted, duplicates and faces
 * contained in other faces dropped, facets ordered lexicographically.
 * No facets at all is the void complex; a single empty facet is {∅}.
 */
class SimplicialComplex
{
    public:
        SimplicialComplex() = default;
        SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);

        /// Δ_n on vertices labelled 1..n+1.
        static SimplicialComplex simplex(int n);
        /// The boundary of Δ_n, a combinatorial (n-1)-sphere; n >= 1.
        static SimplicialComplex simplex_boundary(int n);

        const std::vector<std::string>& vertices() const { return vertices_; }
        const std::vector<Face>& facets() const { return facets_; }
        int vertex_count() const { return static_cast<int>(vertices_.size()); }
        /// -1 for {∅}; -2 for the void complex.
        int dimension() const;
        bool is_pure() const;
        bool contains(const Face& face) const;

        /// faces()[k] lists every face of dimension k-1 (so faces()[0] is {∅}), lexicographically.
        std::vector<std::vector<Face>> faces() const;
        /// f_{-1}, f_0, f_1, ...
        std::vector<Integer> f_vector() const;
        /// Σ_k (-1)^k f_k over k >= -1, which equals Σ (-1)^k rank H̃_k.
        Integer reduced_euler_characteristic() const;

        bool operator==(const SimplicialComplex&) const = default;

    private:
        std::vector<std::string> vertices_;
        std::vector<Face> facets_;
};

/// Disjoint union of vertex sets; labels must be distinct across the two complexes.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/**
 * K^{*r}_Δ: vertex (v, side) has index v*r + side-1 and label "(label,side)";
 * facets are the maximal joins σ_1 * ... * σ_r of pairwise disjoint faces.
 * Throws BudgetExceeded when (r+1)^{|V|} exceeds `budget`.
 */
SimplicialComplex deleted_join(const SimplicialComplex& base, int r, std::uint64_t budget = 50'000'000);

/**
 * Δ_{m,n}^{k_1..k_n}: square (row i, column j) has index (i-1)n + (j-1) and
 * label "(i,j)"; faces are rook placements with at most one rook per row
 * and at most k_j rooks in column j.
 */
SimplicialComplex multiple_chessboard(int m, int n, const std::vector<int>& k);

/**
 * Σ_{m,n}^{k_1..k_n}: a placement is a face iff its column counts, sorted,
 * are bounded entrywise by k sorted. Same vertex layout as
 * multiple_chessboard.
 */
SimplicialComplex symmetric_multiple_chessboard(int m, int n, const std::vector<int>& k);

/**
 * Membership of σ_1 * ... * σ_n in Σ_{m,n}^{k}, where σ_j lists the rows
 * (labels 1..m) used in column j: the σ_j must be pairwise disjoint and
 * some permutation π must give |σ_{π(j)}| <= k_j.
 */
bool symmetric_chessboard_contains(int m, const std::vector<int>& k, const std::vector<IndexSet>& columns);

/**
 * Vertices are the nonempty faces of K, labelled "{a,b,...}" by vertex
 * label and ordered by size then lexicographically; facets are the maximal
 * chains.
 */
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/**
 * C_{2r}^{*k} with the Z/r action rotating each cycle by two vertices.
 * Vertex i of copy c has index 2r c + i and label "c<c+1>:<i>". Its image
 * in [r]^{*2k} is column 2c + (i mod 2) with symbol floor(i/2) + 1.
 */
struct CircleJoinPower
{
    int r = 2;
    int k = 1;
    SimplicialComplex complex;
    /// action[v] = t·v.
    std::vector<int> action;
    /// embedding[v] = (column, symbol).
    std::vector<std::pair<int, int>> embedding;
    /// The image of every facet uses each column at most once.
    bool embeds_as_subcomplex = false;
    /// The embedding intertwines the rotation with the symbol shift.
    bool equivariant = false;
};

CircleJoinPower circle_join_power(int r, int k);

} // namespace tverberg

#endif
