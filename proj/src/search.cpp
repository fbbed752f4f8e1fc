#include "tverberg/search.hpp"

#include <numeric>

#include "tverberg/detail/parallel_scan.hpp"
#include "tverberg/errors.hpp"

namespace tverberg {

std::string to_string(SearchStatus s)
{
    switch (s)
    {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted-none";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

void profiles_rec(int r, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == r)
    {
        out.push_back(cur);
        return;
    }
    const int used = std::accumulate(cur.begin(), cur.end(), 0);
    const int remaining_parts = r - static_cast<int>(cur.size());
    for (int s = cur.empty() ? 1 : cur.back(); used + s * remaining_parts <= n; ++s)
    {
        cur.push_back(s);
        profiles_rec(r, n, cur, out);
        cur.pop_back();
    }
}

// Concatenation of the partition streams of several size profiles.
class ProfileStream
{
    public:
        ProfileStream(int n, std::vector<std::vector<int>> profiles) : n_(n), profiles_(std::move(profiles))
        {
            ground_.resize(static_cast<std::size_t>(n_));
            std::iota(ground_.begin(), ground_.end(), 1);
        }

        std::optional<IndexPartition> next()
        {
            while (current_ < profiles_.size())
            {
                if (!it_)
                    it_.emplace(ground_, profiles_[current_], n_);
                if (auto p = it_->next())
                    return p;
                it_.reset();
                ++current_;
            }
            return std::nullopt;
        }

    private:
        int n_;
        std::vector<std::vector<int>> profiles_;
        IndexSet ground_;
        std::size_t current_ = 0;
        std::optional<PartitionEnumerator> it_;
};

SearchOutcome run_search(const PointConfiguration& config, std::vector<std::vector<int>> profiles,
                         const SearchOptions& options)
{
    const int n = config.size();
    auto make_stream = [&]() { return ProfileStream(n, profiles); };
    auto test = [&](const IndexPartition& p, std::uint64_t& lps) {
        ++lps;
        return convex_hulls_intersect(config, p);
    };
    auto scan = detail::parallel_scan<IndexPartition, IntersectionWitness>(make_stream, test, options.budget,
                                                                            options.workers);
    SearchOutcome out;
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

void check_sizes(const PointConfiguration& config, int r, const std::vector<int>& sizes)
{
    if (static_cast<int>(sizes.size()) != r)
        throw InvalidInput("search: expected " + std::to_string(r) + " part sizes");
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 1; }))
        throw InvalidInput("search: part sizes must be positive");
    if (std::accumulate(sizes.begin(), sizes.end(), 0) > config.size())
        throw InvalidInput("search: part sizes exceed the number of points");
}

} // namespace

std::vector<std::vector<int>> size_profiles(int r, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    profiles_rec(r, n, cur, out);
    return out;
}

SearchOutcome find_tverberg_partition(const PointConfiguration& config, int r,
                                      const std::optional<std::vector<int>>& sizes, const SearchOptions& options)
{
    if (r < 2)
        throw InvalidInput("find_tverberg_partition needs r >= 2");
    if (sizes)
    {
        check_sizes(config, r, *sizes);
        return run_search(config, {*sizes}, options);
    }
    return run_search(config, size_profiles(r, config.size()), options);
}

SearchOutcome refute_occurrence(const PointConfiguration& config, int r, const std::vector<int>& sizes,
                                const SearchOptions& options)
{
    if (r < 2)
        throw InvalidInput("refute_occurrence needs r >= 2");
    check_sizes(config, r, sizes);
    return run_search(config, {sizes}, options);
}

} // namespace tverberg
