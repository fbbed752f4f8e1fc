#ifndef TVERBERG_RANDOM_HPP
#define TVERBERG_RANDOM_HPP

#include <cstdint>

namespace tverberg {

/**
 * SplitMix64 (Steele, Lea and Flood): state += 0x9E3779B97F4A7C15, then the
 * output is mixed by two xor-shift-multiply rounds. The whole stream is a
 * pure function of the seed, so fixtures reproduce on every platform.
 */
struct SplitMix64
{
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
};

} // namespace tverberg

#endif
