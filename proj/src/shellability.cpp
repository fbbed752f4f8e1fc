#include "tverberg/shellability.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "tverberg/errors.hpp"

namespace tverberg {

std::string to_string(ShellStatus s)
{
    switch (s)
    {
        case ShellStatus::shellable: return "shellable";
        case ShellStatus::not_shellable: return "not-shellable";
        case ShellStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

ShellabilityResult is_shellable(const SimplicialComplex& k, std::uint64_t budget)
{
    if (!k.is_pure())
        throw InvalidInput("is_shellable: complex is not pure");
    const auto& facets = k.facets();
    const std::size_t n = facets.size();
    if (n > 64)
        throw InvalidInput("is_shellable: at most 64 facets supported");

    ShellabilityResult out;
    if (n == 0)
    {
        out.status = ShellStatus::shellable;
        return out;
    }

    // meet[i][j] = |F_i ∩ F_j|; contained[i][j][h]: F_i ∩ F_j ⊆ F_i ∩ F_h.
    std::vector<std::vector<Face>> meet(n, std::vector<Face>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(), facets[j].end(),
                                  std::back_inserter(meet[i][j]));
    const std::size_t codim_one = facets[0].size() - 1;

    auto may_follow = [&](std::size_t f, std::uint64_t placed) {
        std::vector<std::size_t> ridges;
        for (std::size_t h = 0; h < n; ++h)
            if ((placed >> h & 1) && meet[f][h].size() == codim_one)
                ridges.push_back(h);
        for (std::size_t g = 0; g < n; ++g)
        {
            if (!(placed >> g & 1))
                continue;
            const Face& fg = meet[f][g];
            const bool covered = std::any_of(ridges.begin(), ridges.end(), [&](std::size_t h) {
                return std::includes(meet[f][h].begin(), meet[f][h].end(), fg.begin(), fg.end());
            });
            if (!covered)
                return false;
        }
        return true;
    };

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_set<std::uint64_t> dead;
    bool exhausted_budget = false;
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t placed) {
        if (placed == full)
            return true;
        if (dead.count(placed))
            return false;
        if (++out.states > budget)
        {
            exhausted_budget = true;
            return false;
        }
        for (std::size_t f = 0; f < n; ++f)
        {
            if ((placed >> f & 1) || !may_follow(f, placed))
                continue;
            out.order.push_back(f);
            if (extend(placed | (std::uint64_t{1} << f)))
                return true;
            out.order.pop_back();
            if (exhausted_budget)
                return false;
        }
        dead.insert(placed);
        return false;
    };

    for (std::size_t first = 0; first < n; ++first)
    {
        out.order.assign(1, first);
        if (extend(std::uint64_t{1} << first))
        {
            out.status = ShellStatus::shellable;
            return out;
        }
        if (exhausted_budget)
            break;
    }
    out.order.clear();
    out.status = exhausted_budget ? ShellStatus::inconclusive : ShellStatus::not_shellable;
    return out;
}

} // namespace tverberg
