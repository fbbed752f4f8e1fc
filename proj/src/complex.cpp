#include "tverberg/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

bool is_subset(const Face& small, const Face& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices))
{
    {
        std::set<std::string> seen(vertices_.begin(), vertices_.end());
        if (seen.size() != vertices_.size())
            throw InvalidInput("SimplicialComplex: duplicate vertex label");
    }
    for (auto& f : facets)
    {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InvalidInput("SimplicialComplex: repeated vertex in a face");
        for (int v : f)
            if (v < 0 || v >= vertex_count())
                throw InvalidInput("SimplicialComplex: face uses an undeclared vertex");
    }
    std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto& f : facets)
    {
        bool contained = false;
        for (const auto& g : facets_)
            if (g.size() > f.size() && is_subset(f, g))
            {
                contained = true;
                break;
            }
        if (!contained)
            facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::simplex(int n)
{
    if (n < 0)
        throw InvalidInput("simplex: n must be >= 0");
    std::vector<std::string> labels;
    Face all;
    for (int i = 0; i <= n; ++i)
    {
        labels.push_back(std::to_string(i + 1));
        all.push_back(i);
    }
    return SimplicialComplex(std::move(labels), {all});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n)
{
    if (n < 0)
        throw InvalidInput("simplex_boundary: n must be >= 0");
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i)
        labels.push_back(std::to_string(i + 1));
    std::vector<Face> facets;
    for (int skip = 0; skip <= n; ++skip)
    {
        Face f;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

int SimplicialComplex::dimension() const
{
    int dim = -2;
    for (const auto& f : facets_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(const Face& face) const
{
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return is_subset(sorted, f); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces() const
{
    if (facets_.empty())
        return {};
    std::vector<std::set<Face>> levels(static_cast<std::size_t>(dimension()) + 2);
    for (const auto& f : facets_)
    {
        const std::size_t s = f.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask)
        {
            Face sub;
            for (std::size_t i = 0; i < s; ++i)
                if (mask >> i & 1)
                    sub.push_back(f[i]);
            levels[sub.size()].insert(std::move(sub));
        }
    }
    std::vector<std::vector<Face>> out;
    for (auto& l : levels)
        out.emplace_back(l.begin(), l.end());
    return out;
}

std::vector<Integer> SimplicialComplex::f_vector() const
{
    std::vector<Integer> out;
    for (const auto& l : faces())
        out.emplace_back(static_cast<long>(l.size()));
    return out;
}

Integer SimplicialComplex::reduced_euler_characteristic() const
{
    Integer chi = 0;
    const auto f = f_vector();
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 == 0 ? -1 : 1) * f[i];
    return chi;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.vertices();
    labels.insert(labels.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Face> facets;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets())
        {
            Face h = f;
            for (int v : g)
                h.push_back(v + a.vertex_count());
            facets.push_back(std::move(h));
        }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex deleted_join(const SimplicialComplex& base, int r, std::uint64_t budget)
{
    if (r < 2)
        throw InvalidInput("deleted_join needs r >= 2");
    const int n = base.vertex_count();
    Integer states = 1;
    for (int i = 0; i < n; ++i)
        states *= r + 1;
    if (states > budget)
        throw BudgetExceeded("deleted_join: " + states.str() + " side assignments exceed the budget");

    std::vector<std::string> labels;
    for (const auto& l : base.vertices())
        for (int s = 1; s <= r; ++s)
            labels.push_back("(" + l + "," + std::to_string(s) + ")");

    std::vector<int> side(static_cast<std::size_t>(n), 0);
    std::vector<Face> facets;
    const auto total = static_cast<std::uint64_t>(states);
    for (std::uint64_t code = 0; code < total; ++code)
    {
        std::uint64_t c = code;
        std::vector<Face> parts(static_cast<std::size_t>(r));
        for (int v = 0; v < n; ++v)
        {
            side[v] = static_cast<int>(c % (r + 1));
            c /= r + 1;
            if (side[v] > 0)
                parts[side[v] - 1].push_back(v);
        }
        if (!std::all_of(parts.begin(), parts.end(), [&](const Face& p) { return base.contains(p); }))
            continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
        {
            if (side[v] != 0)
                continue;
            for (auto& p : parts)
            {
                Face grown = p;
                grown.push_back(v);
                if (base.contains(grown))
                {
                    maximal = false;
                    break;
                }
            }
        }
        if (!maximal)
            continue;
        Face f;
        for (int v = 0; v < n; ++v)
            if (side[v] > 0)
                f.push_back(v * r + side[v] - 1);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

namespace {

// Maximal rook placements admitted by a monotone predicate on column counts.
SimplicialComplex chessboard(int m, int n, const std::function<bool(const std::vector<int>&)>& admits)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");

    std::vector<Face> facets;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::vector<int> row_col(static_cast<std::size_t>(m), -1);
    std::function<void(int)> place = [&](int row) {
        if (row == m)
        {
            for (int i = 0; i < m; ++i)
            {
                if (row_col[i] >= 0)
                    continue;
                for (int j = 0; j < n; ++j)
                {
                    ++counts[j];
                    const bool ok = admits(counts);
                    --counts[j];
                    if (ok)
                        return;
                }
            }
            Face f;
            for (int i = 0; i < m; ++i)
                if (row_col[i] >= 0)
                    f.push_back(i * n + row_col[i]);
            facets.push_back(std::move(f));
            return;
        }
        row_col[row] = -1;
        place(row + 1);
        for (int j = 0; j < n; ++j)
        {
            ++counts[j];
            if (admits(counts))
            {
                row_col[row] = j;
                place(row + 1);
                row_col[row] = -1;
            }
            --counts[j];
        }
    };
    place(0);
    return SimplicialComplex(std::move(labels), std::move(facets));
}

void check_board(int m, int n, const std::vector<int>& k)
{
    if (m < 1 || n < 1)
        throw InvalidInput("chessboard complex needs m, n >= 1");
    if (static_cast<int>(k.size()) != n)
        throw InvalidInput("chessboard complex needs one bound per column");
    if (std::any_of(k.begin(), k.end(), [](int x) { return x < 1; }))
        throw InvalidInput("chessboard complex needs column bounds >= 1");
}

bool sorted_dominated(std::vector<int> counts, std::vector<int> bounds)
{
    std::sort(counts.begin(), counts.end());
    std::sort(bounds.begin(), bounds.end());
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] > bounds[j])
            return false;
    return true;
}

} // namespace

SimplicialComplex multiple_chessboard(int m, int n, const std::vector<int>& k)
{
    check_board(m, n, k);
    return chessboard(m, n, [&](const std::vector<int>& counts) {
        for (int j = 0; j < n; ++j)
            if (counts[j] > k[j])
                return false;
        return true;
    });
}

SimplicialComplex symmetric_multiple_chessboard(int m, int n, const std::vector<int>& k)
{
    check_board(m, n, k);
    return chessboard(m, n, [&](const std::vector<int>& counts) { return sorted_dominated(counts, k); });
}

bool symmetric_chessboard_contains(int m, const std::vector<int>& k, const std::vector<IndexSet>& columns)
{
    if (columns.size() != k.size())
        throw InvalidInput("symmetric_chessboard_contains: one row set per column expected");
    std::set<int> used;
    std::vector<int> counts;
    for (const auto& c : columns)
    {
        for (int row : c)
        {
            if (row < 1 || row > m)
                throw InvalidInput("symmetric_chessboard_contains: row label out of range");
            if (!used.insert(row).second)
                return false;
        }
        counts.push_back(static_cast<int>(c.size()));
    }
    return sorted_dominated(counts, k);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    std::vector<Face> nonempty;
    for (const auto& level : k.faces())
        for (const auto& f : level)
            if (!f.empty())
                nonempty.push_back(f);
    std::map<Face, int> index;
    std::vector<std::string> labels;
    for (const auto& f : nonempty)
    {
        index.emplace(f, static_cast<int>(labels.size()));
        std::string l = "{";
        for (std::size_t i = 0; i < f.size(); ++i)
            l += (i ? "," : "") + k.vertices()[f[i]];
        labels.push_back(l + "}");
    }

    std::vector<Face> facets;
    for (const auto& f : k.facets())
    {
        Face perm = f;
        do
        {
            Face chain;
            Face prefix;
            for (int v : perm)
            {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(index.at(prefix));
            }
            facets.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

CircleJoinPower circle_join_power(int r, int k)
{
    if (r < 2 || k < 1)
        throw InvalidInput("circle_join_power needs r >= 2 and k >= 1");
    const int cycle = 2 * r;
    CircleJoinPower out;
    out.r = r;
    out.k = k;

    std::vector<std::string> labels;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < cycle; ++i)
        {
            labels.push_back("c" + std::to_string(c + 1) + ":" + std::to_string(i));
            out.action.push_back(c * cycle + (i + 2) % cycle);
            out.embedding.emplace_back(2 * c + i % 2, i / 2 + 1);
        }

    std::vector<Face> facets{{}};
    for (int c = 0; c < k; ++c)
    {
        std::vector<Face> next;
        for (const auto& f : facets)
            for (int i = 0; i < cycle; ++i)
            {
                Face g = f;
                g.push_back(c * cycle + i);
                g.push_back(c * cycle + (i + 1) % cycle);
                next.push_back(std::move(g));
            }
        facets = std::move(next);
    }
    out.complex = SimplicialComplex(std::move(labels), std::move(facets));

    out.embeds_as_subcomplex = std::all_of(out.complex.facets().begin(), out.complex.facets().end(),
                                           [&](const Face& f) {
                                               std::set<int> columns;
                                               for (int v : f)
                                                   if (!columns.insert(out.embedding[v].first).second)
                                                       return false;
                                               return true;
                                           });
    out.equivariant = true;
    for (std::size_t v = 0; v < out.action.size(); ++v)
    {
        const auto [col, sym] = out.embedding[v];
        const auto image = out.embedding[out.action[v]];
        out.equivariant = out.equivariant && image.first == col && image.second == sym % r + 1;
    }
    return out;
}

} // namespace tverberg
