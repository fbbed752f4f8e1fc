#include "tverberg/partitions.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "tverberg/errors.hpp"

namespace tverberg {

std::vector<int> IndexPartition::sizes() const
{
    std::vector<int> out;
    out.reserve(parts.size());
    for (const auto& p : parts)
        out.push_back(static_cast<int>(p.size()));
    return out;
}

void validate_partition(const IndexPartition& p)
{
    std::set<int> seen;
    for (const auto& part : p.parts)
    {
        if (!std::is_sorted(part.begin(), part.end()))
            throw InvalidInput("partition part is not sorted");
        for (int v : part)
        {
            if (v < 1 || v > p.ground_size)
                throw InvalidInput("partition label " + std::to_string(v) + " outside 1.." +
                                   std::to_string(p.ground_size));
            if (!seen.insert(v).second)
                throw InvalidInput("partition parts overlap at label " + std::to_string(v));
        }
    }
}

DimensionTuple::DimensionTuple(int r, int d, std::vector<int> dims) : r_(r), d_(d), dims_(std::move(dims))
{
    if (r_ < 2)
        throw InvalidInput("dimension tuple needs r >= 2");
    if (d_ < 1)
        throw InvalidInput("dimension tuple needs d >= 1");
    if (static_cast<int>(dims_.size()) != r_)
        throw InvalidInput("dimension tuple must have exactly r entries");
    if (!std::is_sorted(dims_.begin(), dims_.end()))
        throw InvalidInput("dimension tuple must be nondecreasing");
}

bool is_admissible(const DimensionTuple& t)
{
    const auto& dims = t.dims();
    const int sum = std::accumulate(dims.begin(), dims.end(), 0);
    return sum == (t.r() - 1) * t.d() && dims.front() >= t.d() / 2 && dims.back() <= t.d();
}

bool is_balanced(const DimensionTuple& t)
{
    return t.dims().back() - t.dims().front() <= 1;
}

namespace {

void admissible_rec(int r, int d, int remaining, std::vector<int>& cur, std::vector<DimensionTuple>& out)
{
    const int left = r - static_cast<int>(cur.size());
    if (left == 0)
    {
        if (remaining == 0)
            out.emplace_back(r, d, cur);
        return;
    }
    for (int x = cur.empty() ? d / 2 : cur.back(); x <= d && x * left <= remaining; ++x)
    {
        if (remaining - x > d * (left - 1))
            continue;
        cur.push_back(x);
        admissible_rec(r, d, remaining - x, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<DimensionTuple> admissible_tuples(int r, int d)
{
    if (r < 2 || d < 1)
        throw InvalidInput("admissible_tuples needs r >= 2 and d >= 1");
    std::vector<DimensionTuple> out;
    std::vector<int> cur;
    admissible_rec(r, d, (r - 1) * d, cur, out);
    return out;
}

DimensionTuple balanced_tuple(int r, int d)
{
    if (r < 2 || d < 1)
        throw InvalidInput("balanced_tuple needs r >= 2 and d >= 1");
    const int total = (r - 1) * d;
    const int low = total / r;
    const int high_count = total - low * r;
    std::vector<int> dims(static_cast<std::size_t>(r - high_count), low);
    dims.insert(dims.end(), static_cast<std::size_t>(high_count), low + 1);
    return DimensionTuple(r, d, std::move(dims));
}

Rational continuous_lower_bound(int r, int d)
{
    if (r < 2 || d < 1)
        throw InvalidInput("continuous_lower_bound needs r >= 2 and d >= 1");
    return Rational((r - 1) * (d - 1), r);
}

std::vector<IndexSet> color_classes(int r, int d)
{
    std::vector<IndexSet> classes;
    for (int k = 1; k <= d + 1; ++k)
    {
        IndexSet y;
        for (int v = (r - 1) * (k - 1) + 1; v <= (r - 1) * k + 1; ++v)
            y.push_back(v);
        classes.push_back(std::move(y));
    }
    return classes;
}

bool is_colorful(const IndexPartition& p, int r, int d)
{
    const int n = (r - 1) * (d + 1) + 1;
    if (p.ground_size != n)
        throw InvalidInput("is_colorful: ground size " + std::to_string(p.ground_size) + " != (r-1)(d+1)+1 = " +
                           std::to_string(n));
    validate_partition(p);
    if (static_cast<int>(p.parts.size()) != r)
        return false;
    std::vector<int> owner(n + 1, -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i])
            owner[v] = static_cast<int>(i);
    if (std::count(owner.begin() + 1, owner.end(), -1) != 0)
        throw InvalidInput("is_colorful: parts do not cover the ground set");

    for (const auto& y : color_classes(r, d))
    {
        std::vector<int> hits(r, 0);
        for (int v : y)
            ++hits[owner[v]];
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
            return false;
    }
    return true;
}

ColorfulConstruction build_colorful_partition_traced(const DimensionTuple& t)
{
    if (!is_admissible(t))
        throw InvalidInput("build_colorful_partition: tuple is not Tverberg admissible");
    const int r = t.r();
    const int d = t.d();
    const auto& dims = t.dims();

    ColorfulConstruction out;
    out.split.assign(r, {});
    std::vector<int> order;
    for (int k = 1; k <= d; k += 2)
        order.push_back(k);
    for (int k = 2; k <= d; k += 2)
        order.push_back(k);
    std::size_t next = 0;
    std::vector<int> owner(d + 1, -1);
    for (int i = 0; i < r; ++i)
    {
        for (int c = 0; c < d - dims[i]; ++c)
        {
            const int k = order.at(next++);
            out.split[i].push_back(k);
            owner[k] = i;
        }
        std::sort(out.split[i].begin(), out.split[i].end());
    }

    std::vector<IndexSet> parts(r);
    for (int k = 1; k <= d; ++k)
        parts[owner[k]].push_back((r - 1) * k + 1);

    // Deal `points` in increasing order to the parts not listed in `skip`.
    auto deal = [&](int first, int last, std::initializer_list<int> skip) {
        int part = 0;
        for (int v = first; v <= last; ++v)
        {
            while (part < r && std::find(skip.begin(), skip.end(), part) != skip.end())
                ++part;
            if (part == r)
                throw std::logic_error("build_colorful_partition: no eligible part left");
            parts[part++].push_back(v);
        }
    };

    deal(1, r - 1, {owner[1]});
    for (int k = 1; k < d; ++k)
    {
        if (owner[k] == owner[k + 1])
            throw std::logic_error("build_colorful_partition: split placed consecutive integers together");
        deal((r - 1) * k + 2, (r - 1) * (k + 1), {owner[k], owner[k + 1]});
    }
    deal((r - 1) * d + 2, (r - 1) * (d + 1) + 1, {owner[d]});

    for (int i = 0; i < r; ++i)
    {
        std::sort(parts[i].begin(), parts[i].end());
        if (static_cast<int>(parts[i].size()) != dims[i] + 1)
            throw std::logic_error("build_colorful_partition: part size differs from d_i + 1");
    }
    out.partition = IndexPartition{(r - 1) * (d + 1) + 1, std::move(parts)};
    return out;
}

IndexPartition build_colorful_partition(const DimensionTuple& t)
{
    return build_colorful_partition_traced(t).partition;
}

PartitionEnumerator::PartitionEnumerator(IndexSet ground, std::vector<int> sizes, int ground_size)
    : ground_(std::move(ground)), sizes_(std::move(sizes)), ground_size_(ground_size)
{
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
        throw InvalidInput("enumerate_partitions: ground set has repeated labels");
    if (std::any_of(sizes_.begin(), sizes_.end(), [](int s) { return s < 1; }))
        throw InvalidInput("enumerate_partitions: part sizes must be positive");
    if (ground_size_ == 0 && !ground_.empty())
        ground_size_ = ground_.back();
    levels_.resize(sizes_.size());
}

IndexSet PartitionEnumerator::pool_after(std::size_t i) const
{
    const Level& lv = levels_[i];
    IndexSet rest;
    std::size_t k = 0;
    for (std::size_t p = 0; p < lv.pool.size(); ++p)
    {
        if (k < lv.pos.size() && lv.pos[k] == p)
        {
            ++k;
            continue;
        }
        rest.push_back(lv.pool[p]);
    }
    return rest;
}

int PartitionEnumerator::lower_bound_for(std::size_t i) const
{
    for (std::size_t j = i; j-- > 0;)
        if (sizes_[j] == sizes_[i])
            return levels_[j].pool[levels_[j].pos[0]];
    return INT_MIN;
}

bool PartitionEnumerator::init_level(std::size_t i)
{
    Level& lv = levels_[i];
    lv.pool = i == 0 ? ground_ : pool_after(i - 1);
    const auto s = static_cast<std::size_t>(sizes_[i]);
    const int lb = lower_bound_for(i);
    std::size_t p = 0;
    while (p < lv.pool.size() && lv.pool[p] <= lb)
        ++p;
    if (p + s > lv.pool.size())
        return false;
    lv.pos.resize(s);
    std::iota(lv.pos.begin(), lv.pos.end(), p);
    return true;
}

bool PartitionEnumerator::advance_level(std::size_t i)
{
    Level& lv = levels_[i];
    const std::size_t n = lv.pool.size();
    const std::size_t s = lv.pos.size();
    for (std::size_t t = s; t-- > 0;)
    {
        if (lv.pos[t] < n - s + t)
        {
            ++lv.pos[t];
            for (std::size_t u = t + 1; u < s; ++u)
                lv.pos[u] = lv.pos[u - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<IndexPartition> PartitionEnumerator::next()
{
    if (done_)
        return std::nullopt;
    const std::size_t depth = levels_.size();

    // Fill levels [from, depth), backtracking into earlier levels as needed.
    auto fill = [&](std::size_t from) {
        std::size_t i = from;
        while (i < depth)
        {
            if (init_level(i))
            {
                ++i;
                continue;
            }
            while (true)
            {
                if (i == 0)
                    return false;
                --i;
                if (advance_level(i))
                {
                    ++i;
                    break;
                }
            }
        }
        return true;
    };

    if (!started_)
    {
        started_ = true;
        if (depth == 0)
        {
            done_ = true;
            return IndexPartition{ground_size_, {}};
        }
        if (!fill(0))
        {
            done_ = true;
            return std::nullopt;
        }
    }
    else
    {
        std::size_t i = depth;
        while (true)
        {
            if (i == 0)
            {
                done_ = true;
                return std::nullopt;
            }
            --i;
            if (advance_level(i))
                break;
        }
        if (!fill(i + 1))
        {
            done_ = true;
            return std::nullopt;
        }
    }

    IndexPartition out{ground_size_, {}};
    for (const auto& lv : levels_)
    {
        IndexSet part;
        for (auto p : lv.pos)
            part.push_back(lv.pool[p]);
        out.parts.push_back(std::move(part));
    }
    return out;
}

std::vector<IndexPartition> enumerate_partitions(const IndexSet& ground, const std::vector<int>& sizes)
{
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > static_cast<int>(ground.size()))
        return {};
    PartitionEnumerator it(ground, sizes);
    std::vector<IndexPartition> out;
    while (auto p = it.next())
        out.push_back(std::move(*p));
    return out;
}

namespace {

Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

Integer count_partitions(std::size_t ground, const std::vector<int>& sizes)
{
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (n > static_cast<int>(ground))
        return 0;
    Integer count = factorial(static_cast<int>(ground)) / (factorial(static_cast<int>(ground) - n));
    std::map<int, int> multiplicity;
    for (int s : sizes)
    {
        count /= factorial(s);
        ++multiplicity[s];
    }
    for (const auto& [s, m] : multiplicity)
        count /= factorial(m);
    return count;
}

IndexPartition sample_partition(const IndexSet& ground, const std::vector<int>& sizes, int ground_size, SplitMix64& rng)
{
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > static_cast<int>(ground.size()))
        throw InvalidInput("sample_partition: sizes exceed ground set");
    IndexSet shuffled = ground;
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.below(i)]);

    IndexPartition out{ground_size, {}};
    std::size_t at = 0;
    for (int s : sizes)
    {
        IndexSet part(shuffled.begin() + at, shuffled.begin() + at + s);
        std::sort(part.begin(), part.end());
        out.parts.push_back(std::move(part));
        at += s;
    }

    // Canonical order among equal sizes: increasing minima.
    std::map<int, std::vector<std::size_t>> slots;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        slots[sizes[i]].push_back(i);
    for (const auto& [s, idx] : slots)
    {
        std::vector<IndexSet> group;
        for (auto i : idx)
            group.push_back(out.parts[i]);
        std::sort(group.begin(), group.end(), [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
        for (std::size_t k = 0; k < idx.size(); ++k)
            out.parts[idx[k]] = std::move(group[k]);
    }
    return out;
}

} // namespace tverberg
