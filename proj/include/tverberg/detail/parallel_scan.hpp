#ifndef TVERBERG_DETAIL_PARALLEL_SCAN_HPP
#define TVERBERG_DETAIL_PARALLEL_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace tverberg::detail {

template <class Item, class Payload>
struct ScanOutcome
{
    std::optional<std::uint64_t> hit_index;
    std::optional<Item> item;
    std::optional<Payload> payload;
    std::uint64_t examined = 0;
    std::uint64_t lps = 0;
    /// True when the stream ended before the budget did.
    bool complete = false;
};

/**
 * First hit of `test` over a deterministic stream, scanned by `workers`
 * threads with stride `workers`. Every worker replays the stream from its
 * own `make_stream()` and only tests indices congruent to its id. The
 * result, including the counters, is the one a single worker would report:
 * counters cover exactly the indices up to the first hit.
 *
 * `test(item, lps)` returns a payload on a hit and adds its LP count to lps.
 */
template <class Item, class Payload, class MakeStream, class Test>
ScanOutcome<Item, Payload> parallel_scan(MakeStream make_stream, Test test, std::uint64_t budget, unsigned workers)
{
    workers = std::max(1u, workers);
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};
    std::atomic<std::uint64_t> stream_length{none};
    std::mutex mu;
    ScanOutcome<Item, Payload> out;
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> lp_log(workers);

    auto run = [&](unsigned id) {
        auto stream = make_stream();
        for (std::uint64_t i = 0;; ++i)
        {
            if (i >= best.load())
                return;
            auto item = stream.next();
            if (!item)
            {
                stream_length.store(i);
                return;
            }
            if (i >= budget)
                return;
            if (i % workers != id)
                continue;
            std::uint64_t lps = 0;
            auto hit = test(*item, lps);
            lp_log[id].emplace_back(i, lps);
            if (hit)
            {
                std::lock_guard<std::mutex> lock(mu);
                if (i < best.load())
                {
                    best.store(i);
                    out.hit_index = i;
                    out.item = std::move(*item);
                    out.payload = std::move(*hit);
                }
                return;
            }
        }
    };

    if (workers == 1)
    {
        run(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }

    std::uint64_t last;
    if (out.hit_index)
    {
        last = *out.hit_index + 1;
    }
    else if (stream_length.load() != none && stream_length.load() <= budget)
    {
        last = stream_length.load();
        out.complete = true;
    }
    else
    {
        last = budget;
    }
    out.examined = last;
    for (const auto& log : lp_log)
        for (const auto& [i, lps] : log)
            if (i < last)
                out.lps += lps;
    return out;
}

} // namespace tverberg::detail

#endif
