#include "tverberg/generators.hpp"

#include <set>

#include "tverberg/errors.hpp"
#include "tverberg/random.hpp"

namespace tverberg {

PointConfiguration moment_curve_points(int d, const Vector& params)
{
    if (d < 1)
        throw InvalidInput("moment_curve_points needs d >= 1");
    std::set<Rational> seen;
    std::vector<Vector> points;
    for (const auto& t : params)
    {
        if (!seen.insert(t).second)
            throw InvalidInput("moment_curve_points: repeated parameter " + to_string(t));
        Vector p;
        Rational power = t;
        for (int c = 0; c < d; ++c)
        {
            p.push_back(power);
            power *= t;
        }
        points.push_back(std::move(p));
    }
    return PointConfiguration(d, std::move(points));
}

PointConfiguration moment_curve_points(int d, int n)
{
    Vector params;
    for (int i = 1; i <= n; ++i)
        params.emplace_back(i);
    return moment_curve_points(d, params);
}

PointConfiguration random_rational_config(int n, int d, std::uint64_t seed, const RandomConfigOptions& options)
{
    if (n < 1 || d < 1)
        throw InvalidInput("random_rational_config needs N >= 1 and d >= 1");
    const std::int64_t bound = options.denominator_bound;
    if (bound < 1)
        throw InvalidInput("random_rational_config needs denominator_bound >= 1");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt <= options.max_retries; ++attempt)
    {
        std::vector<Vector> points;
        for (int i = 0; i < n; ++i)
        {
            Vector p;
            for (int c = 0; c < d; ++c)
            {
                const std::int64_t q = rng.between(1, bound);
                const std::int64_t p_num = rng.between(-bound * q, bound * q);
                p.emplace_back(p_num, q);
            }
            points.push_back(std::move(p));
        }
        PointConfiguration config(d, std::move(points));
        if (in_general_position(config).status == PositionStatus::holds)
            return config;
    }
    throw RetriesExhausted("random_rational_config: no configuration in general position after " +
                           std::to_string(options.max_retries) + " retries");
}

} // namespace tverberg
