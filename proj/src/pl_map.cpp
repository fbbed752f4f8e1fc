#include "tverberg/pl_map.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "tverberg/detail/parallel_scan.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/random.hpp"

namespace tverberg {

PLMap::PLMap(int n, int target_dim, std::vector<Vector> values)
    : n_(n), target_dim_(target_dim), values_(std::move(values))
{
    if (n_ < 0 || n_ + 1 > max_pl_map_vertices)
        throw InvalidInput("PLMap supports 1.." + std::to_string(max_pl_map_vertices) + " domain vertices");
    if (target_dim_ < 1)
        throw InvalidInput("PLMap needs target dimension >= 1");
    if (values_.size() != (std::size_t{1} << (n_ + 1)))
        throw InvalidInput("PLMap needs one value per nonempty face of the simplex");
    for (std::size_t m = 1; m < values_.size(); ++m)
        if (static_cast<int>(values_[m].size()) != target_dim_)
            throw InvalidInput("PLMap value has wrong dimension");
}

const Vector& PLMap::value(FaceMask face) const
{
    if (face == 0 || face >= values_.size())
        throw InvalidInput("PLMap::value: not a nonempty face of the domain");
    return values_[face];
}

bool PLMap::affine_on(FaceMask face) const
{
    // Enumerate nonempty subfaces with the standard submask walk.
    for (FaceMask sub = face; sub != 0; sub = (sub - 1) & face)
    {
        if (std::popcount(sub) == 1)
            continue;
        Vector mean(static_cast<std::size_t>(target_dim_), Rational(0));
        for (FaceMask rest = sub; rest != 0; rest &= rest - 1)
            mean = mean + value(rest & (~rest + 1));
        const Rational k = std::popcount(sub);
        for (auto& c : mean)
            c /= k;
        if (mean != value(sub))
            return false;
    }
    return true;
}

IndexSet face_labels(FaceMask face)
{
    IndexSet out;
    for (int i = 0; face != 0; ++i, face >>= 1)
        if (face & 1)
            out.push_back(i + 1);
    return out;
}

FaceMask face_mask(const IndexSet& labels)
{
    FaceMask m = 0;
    for (int l : labels)
    {
        if (l < 1 || l > 64)
            throw InvalidInput("face_mask: label out of range");
        m |= FaceMask{1} << (l - 1);
    }
    return m;
}

namespace {

Vector barycenter(FaceMask face, int n)
{
    Vector x(static_cast<std::size_t>(n) + 1, Rational(0));
    const Rational w(1, std::popcount(face));
    for (int l : face_labels(face))
        x[l - 1] = w;
    return x;
}

Vector mean_of(const PointConfiguration& g, FaceMask face)
{
    Vector m(static_cast<std::size_t>(g.dim()), Rational(0));
    for (int l : face_labels(face))
        m = m + g.point(l);
    const Rational k = std::popcount(face);
    for (auto& c : m)
        c /= k;
    return m;
}

} // namespace

PLMap affine_pl_map(const PointConfiguration& g)
{
    const int n = g.size() - 1;
    if (g.size() > max_pl_map_vertices)
        throw InvalidInput("affine_pl_map: too many vertices");
    std::vector<Vector> values(std::size_t{1} << g.size());
    for (FaceMask m = 1; m < values.size(); ++m)
        values[m] = mean_of(g, m);
    return PLMap(n, g.dim(), std::move(values));
}

PLMap build_counterexample_map(int n, int d, int d1, const PointConfiguration& g)
{
    if (d < 2)
        throw InvalidInput("build_counterexample_map needs d >= 2");
    if (g.dim() != d - 1)
        throw InvalidInput("build_counterexample_map: g must live in dimension d-1 = " + std::to_string(d - 1));
    if (g.size() != n + 1)
        throw InvalidInput("build_counterexample_map: g must have N+1 = " + std::to_string(n + 1) + " points");
    if (d1 < 0 || d1 > n)
        throw InvalidInput("build_counterexample_map: d1 out of range");
    if (n + 1 > max_pl_map_vertices)
        throw InvalidInput("build_counterexample_map: too many vertices");

    std::vector<Vector> values(std::size_t{1} << (n + 1));
    for (FaceMask m = 1; m < values.size(); ++m)
    {
        Vector v = mean_of(g, m);
        v.push_back(squared_distance_to_skeleton(barycenter(m, n), d1));
        values[m] = std::move(v);
    }
    return PLMap(n, d, std::move(values));
}

Vector evaluate_pl_map(const PLMap& f, const Vector& x)
{
    if (static_cast<int>(x.size()) != f.n() + 1 || !is_barycentric(x))
        throw InvalidInput("evaluate_pl_map: not a barycentric point of the domain");
    std::vector<int> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] > x[b]; });

    Vector out(static_cast<std::size_t>(f.target_dim()), Rational(0));
    FaceMask chain = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        chain |= FaceMask{1} << order[k];
        const Rational next = k + 1 < order.size() ? x[order[k + 1]] : Rational(0);
        const Rational weight = (x[order[k]] - next) * static_cast<long>(k + 1);
        if (weight == 0)
            continue;
        const Vector& v = f.value(chain);
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += weight * v[c];
    }
    return out;
}

namespace {

// A simplex of the subdivision inside one face, or the whole face when f is
// affine there; vertices are face masks whose barycenters span the cell.
struct Cell
{
    std::vector<FaceMask> chain;
    std::vector<Vector> images;
    Vector lo, hi;
};

void fit_box(const std::vector<Vector>& pts, const std::vector<std::uint8_t>& idx, Vector& lo, Vector& hi)
{
    lo = pts[idx[0]];
    hi = pts[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k)
    {
        const Vector& p = pts[idx[k]];
        for (std::size_t c = 0; c < p.size(); ++c)
        {
            if (p[c] < lo[c])
                lo[c] = p[c];
            if (p[c] > hi[c])
                hi[c] = p[c];
        }
    }
}

std::vector<Cell> cells_of(const PLMap& f, FaceMask face)
{
    std::vector<Cell> out;
    const IndexSet labels = face_labels(face);
    auto finish = [&](Cell c) {
        std::vector<std::uint8_t> all(c.images.size());
        std::iota(all.begin(), all.end(), 0);
        fit_box(c.images, all, c.lo, c.hi);
        out.push_back(std::move(c));
    };
    if (f.affine_on(face))
    {
        Cell c;
        for (int l : labels)
        {
            const FaceMask v = FaceMask{1} << (l - 1);
            c.chain.push_back(v);
            c.images.push_back(f.value(v));
        }
        finish(std::move(c));
        return out;
    }
    std::vector<int> perm = labels;
    do
    {
        Cell c;
        FaceMask m = 0;
        for (int l : perm)
        {
            m |= FaceMask{1} << (l - 1);
            c.chain.push_back(m);
            c.images.push_back(f.value(m));
        }
        finish(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct Active
{
    const Cell* cell;
    std::vector<std::uint8_t> idx;
    Vector lo, hi;
};

// Intersects the boxes of the active cells. Whenever the intersection is a
// single value v in some coordinate and v is the extreme value of a cell in
// that coordinate, the common point must lie on the face of that cell
// spanned by its vertices with coordinate v; cells are cut down
// accordingly until nothing changes. False iff the boxes are disjoint.
bool tighten(std::vector<Active>& act, Vector& lo, Vector& hi)
{
    const std::size_t dim = act[0].lo.size();
    while (true)
    {
        lo = act[0].lo;
        hi = act[0].hi;
        for (std::size_t a = 1; a < act.size(); ++a)
        {
            for (std::size_t c = 0; c < dim; ++c)
            {
                if (act[a].lo[c] > lo[c])
                    lo[c] = act[a].lo[c];
                if (act[a].hi[c] < hi[c])
                    hi[c] = act[a].hi[c];
            }
        }
        for (std::size_t c = 0; c < dim; ++c)
            if (lo[c] > hi[c])
                return false;

        bool changed = false;
        for (std::size_t c = 0; c < dim; ++c)
        {
            if (lo[c] != hi[c])
                continue;
            const Rational& v = lo[c];
            for (auto& a : act)
            {
                if (a.lo[c] == a.hi[c] || (a.lo[c] != v && a.hi[c] != v))
                    continue;
                std::vector<std::uint8_t> keep;
                for (auto i : a.idx)
                    if (a.cell->images[i][c] == v)
                        keep.push_back(i);
                a.idx = std::move(keep);
                fit_box(a.cell->images, a.idx, a.lo, a.hi);
                changed = true;
            }
        }
        if (!changed)
            return true;
    }
}

class SampledTuples
{
    public:
        SampledTuples(IndexSet ground, std::vector<int> sizes, int ground_size, std::uint64_t seed)
            : ground_(std::move(ground)), sizes_(std::move(sizes)), ground_size_(ground_size), seed_(seed)
        {}

        std::optional<IndexPartition> next()
        {
            SplitMix64 mixer(seed_ ^ (0xD1B54A32D192ED03ULL * (++counter_)));
            SplitMix64 rng(mixer.next());
            return sample_partition(ground_, sizes_, ground_size_, rng);
        }

    private:
        IndexSet ground_;
        std::vector<int> sizes_;
        int ground_size_;
        std::uint64_t seed_;
        std::uint64_t counter_ = 0;
};

struct TupleSearch
{
    const PLMap& f;
    const std::unordered_map<FaceMask, std::vector<Cell>>& cells;

    std::optional<IntersectionWitness> operator()(const IndexPartition& faces, std::uint64_t& lps) const
    {
        std::vector<const std::vector<Cell>*> per_part;
        for (const auto& part : faces.parts)
            per_part.push_back(&cells.at(face_mask(part)));
        std::vector<Active> chosen;
        return descend(faces, per_part, chosen, lps);
    }

    std::optional<IntersectionWitness> descend(const IndexPartition& faces,
                                               const std::vector<const std::vector<Cell>*>& per_part,
                                               std::vector<Active>& chosen, std::uint64_t& lps) const
    {
        const std::size_t level = chosen.size();
        if (level == per_part.size())
            return solve(faces, chosen, lps);
        for (const Cell& cell : *per_part[level])
        {
            std::vector<Active> next = chosen;
            Active a{&cell, {}, cell.lo, cell.hi};
            a.idx.resize(cell.images.size());
            std::iota(a.idx.begin(), a.idx.end(), 0);
            next.push_back(std::move(a));
            Vector lo, hi;
            if (!tighten(next, lo, hi))
                continue;
            if (auto w = descend(faces, per_part, next, lps))
                return w;
        }
        return std::nullopt;
    }

    std::optional<IntersectionWitness> solve(const IndexPartition& faces, const std::vector<Active>& chosen,
                                             std::uint64_t& lps) const
    {
        std::vector<std::vector<Vector>> hulls;
        for (const auto& a : chosen)
        {
            std::vector<Vector> pts;
            for (auto i : a.idx)
                pts.push_back(a.cell->images[i]);
            hulls.push_back(std::move(pts));
        }
        ++lps;
        auto hit = common_point(hulls, static_cast<std::size_t>(f.target_dim()));
        if (!hit)
            return std::nullopt;

        IntersectionWitness w;
        w.point = std::move(hit->point);
        for (std::size_t p = 0; p < chosen.size(); ++p)
        {
            Vector x(static_cast<std::size_t>(f.n()) + 1, Rational(0));
            for (std::size_t k = 0; k < chosen[p].idx.size(); ++k)
            {
                const FaceMask m = chosen[p].cell->chain[chosen[p].idx[k]];
                const Rational share = hit->weights[p][k] / std::popcount(m);
                for (int l : face_labels(m))
                    x[l - 1] += share;
            }
            std::map<int, Rational> coeffs;
            for (int l : faces.parts[p])
                coeffs.emplace(l, x[l - 1]);
            w.coefficients.push_back(std::move(coeffs));
        }
        return w;
    }
};

} // namespace

SearchOutcome search_map_violation(const PLMap& f, int r, const DimensionTuple& dims, const MapSearchOptions& options)
{
    if (r != dims.r())
        throw InvalidInput("search_map_violation: dims must have length r");
    std::vector<int> sizes;
    for (int k : dims.dims())
    {
        if (k < 0)
            throw InvalidInput("search_map_violation: negative face dimension");
        sizes.push_back(k + 1);
    }
    const int vertices = f.n() + 1;
    if (std::accumulate(sizes.begin(), sizes.end(), 0) > vertices)
        throw InvalidInput("search_map_violation: faces do not fit disjointly in the domain");
    if (options.budget < 1)
        throw InvalidInput("search_map_violation: budget must be positive");

    // Cells of every face that can occur, shared read-only by the workers.
    std::unordered_map<FaceMask, std::vector<Cell>> cells;
    for (FaceMask m = 1; m < (FaceMask{1} << vertices); ++m)
    {
        const int k = std::popcount(m);
        if (std::find(sizes.begin(), sizes.end(), k) != sizes.end())
            cells.emplace(m, cells_of(f, m));
    }

    IndexSet ground(static_cast<std::size_t>(vertices));
    std::iota(ground.begin(), ground.end(), 1);
    const bool exhaustive = count_partitions(ground.size(), sizes) <= options.budget;

    TupleSearch test{f, cells};
    detail::ScanOutcome<IndexPartition, IntersectionWitness> scan;
    if (exhaustive)
    {
        scan = detail::parallel_scan<IndexPartition, IntersectionWitness>(
            [&] { return PartitionEnumerator(ground, sizes, vertices); }, test, options.budget, options.workers);
    }
    else
    {
        scan = detail::parallel_scan<IndexPartition, IntersectionWitness>(
            [&] { return SampledTuples(ground, sizes, vertices, options.seed); }, test, options.budget,
            options.workers);
    }

    SearchOutcome out;
    out.sampled = !exhaustive;
    out.stats.partitions_examined = scan.examined;
    out.stats.lps_solved = scan.lps;
    if (scan.hit_index)
    {
        out.status = SearchStatus::found;
        out.partition = std::move(scan.item);
        out.witness = std::move(scan.payload);
    }
    else
    {
        out.status = scan.complete ? SearchStatus::exhausted_none : SearchStatus::budget_exhausted;
    }
    return out;
}

bool verify_map_witness(const PLMap& f, const IndexPartition& faces, const IntersectionWitness& witness)
{
    if (witness.coefficients.size() != faces.parts.size())
        return false;
    for (std::size_t p = 0; p < faces.parts.size(); ++p)
    {
        Vector x(static_cast<std::size_t>(f.n()) + 1, Rational(0));
        for (const auto& [label, w] : witness.coefficients[p])
        {
            if (std::find(faces.parts[p].begin(), faces.parts[p].end(), label) == faces.parts[p].end())
                return false;
            x[label - 1] = w;
        }
        if (!is_barycentric(x) || evaluate_pl_map(f, x) != witness.point)
            return false;
    }
    return true;
}

} // namespace tverberg
