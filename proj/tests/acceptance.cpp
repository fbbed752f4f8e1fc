// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "tverberg/complex.hpp"
#include "tverberg/constraint_map.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/orbit.hpp"
#include "tverberg/pl_map.hpp"
#include "tverberg/search.hpp"

using namespace tverberg;

namespace {

struct Result
{
    bool pass = false;
    std::string detail;
};

unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

Result existence()
{
    int failures = 0, trials = 0;
    for (const auto& [r, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}, {4, 1}})
    {
        const int n = (r - 1) * (d + 1) + 1;
        for (std::uint64_t t = 0; t < 50; ++t)
        {
            ++trials;
            const auto c = random_rational_config(n, d, 1000 * static_cast<std::uint64_t>(r * 10 + d) + t);
            const auto out = find_tverberg_partition(c, r, std::nullopt);
            if (out.status != SearchStatus::found || !verify_witness(c, *out.partition, *out.witness))
                ++failures;
        }
    }
    return {failures == 0, std::to_string(trials) + " trials, " + std::to_string(failures) + " failures"};
}

Result balanced()
{
    int failures = 0;
    for (std::uint64_t t = 0; t < 50; ++t)
    {
        const auto c = random_rational_config(9, 2, 5000 + t);
        const auto out = find_tverberg_partition(c, 3, std::vector<int>{2, 2, 3});
        if (out.status != SearchStatus::found || !verify_witness(c, *out.partition, *out.witness))
            ++failures;
    }
    return {failures == 0, "50 configurations of 9 points, sizes (2,2,3), " + std::to_string(failures) + " failures"};
}

Result colorful()
{
    int tuples = 0, failures = 0, other_reading = 0;
    for (int r = 2; r <= 6; ++r)
        for (int d = 1; d <= 6; ++d)
            for (const auto& t : admissible_tuples(r, d))
            {
                ++tuples;
                const auto p = build_colorful_partition(t);
                bool ok = is_colorful(p, r, d);
                bool alt = true;
                for (int i = 0; i < r; ++i)
                {
                    ok = ok && static_cast<int>(p.parts[i].size()) == t.dims()[i] + 1;
                    alt = alt && static_cast<int>(p.parts[i].size()) == d - t.dims()[i];
                }
                failures += !ok;
                other_reading += alt;
            }
    return {failures == 0, std::to_string(tuples) + " admissible tuples, " + std::to_string(failures) +
                               " failures; parts of size d - d_i in " + std::to_string(other_reading) + " tuples"};
}

Result constraint_zero_set()
{
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}})
    {
        const int n = (r - 1) * (d + 2);
        const auto v = verify_constraint_zero_set(n, balanced_tuple(r, d));
        ok = ok && v.passed && v.violating_chain.empty();
        detail << "(r=" << r << ",d=" << d << ",N=" << n << "): " << (v.passed ? "pass" : v.failure) << " over "
               << v.faces << " join faces; ";
    }
    return {ok, detail.str() + "no violating chain"};
}

Result moment_refutation()
{
    std::uint64_t lps = 0;
    int found = 0, inconclusive = 0, profiles = 0;
    for (int d = 2; d <= 4; ++d)
        for (int n = 9; n <= 11; ++n)
        {
            const auto c = moment_curve_points(d, n);
            // Hulls of r parts meeting implies hulls of the first two meeting,
            // so r = 2 covers every r.
            for (const auto& prof : size_profiles(2, n))
            {
                if (prof.front() > d / 2)
                    continue;
                ++profiles;
                const auto out = refute_occurrence(c, 2, prof, {.budget = UINT64_MAX, .workers = default_workers()});
                lps += out.stats.lps_solved;
                found += out.status == SearchStatus::found;
                inconclusive += out.status == SearchStatus::budget_exhausted;
            }
        }
    return {found == 0 && inconclusive == 0,
            std::to_string(profiles) + " profiles exhausted with " + std::to_string(lps) + " LPs, " +
                std::to_string(found) + " intersections"};
}

Result counterexample_probe()
{
    const int r = 3, d = 3, n = 13, d1 = 1;
    std::optional<PointConfiguration> g;
    std::uint64_t seed = 0;
    for (; seed < 10 && !g; ++seed)
    {
        auto candidate = random_rational_config(n + 1, d - 1, seed);
        if (strong_general_position_check(candidate, r, 3'000'000, seed).status == PositionStatus::holds)
            g = candidate;
    }
    if (!g)
        return {false, "no g in verified strong general position"};
    const auto f = build_counterexample_map(n, d, d1, *g);
    const auto probe = search_map_violation(f, r, DimensionTuple(r, d, {1, 2, 3}),
                                            {.budget = 100'000, .workers = default_workers(), .seed = 2024});
    const auto control_points = random_rational_config(n + 1, d, 77);
    const auto control = search_map_violation(affine_pl_map(control_points), r, balanced_tuple(r, d),
                                              {.budget = 1'000'000, .workers = default_workers(), .seed = 0});
    const bool control_ok = control.status == SearchStatus::found &&
                            verify_map_witness(affine_pl_map(control_points), *control.partition, *control.witness);
    const bool probe_ok = probe.status != SearchStatus::found && probe.stats.partitions_examined >= 100'000;
    return {probe_ok && control_ok, "g seed " + std::to_string(seed - 1) + " strong GP exhaustive; " +
                                        std::to_string(probe.stats.partitions_examined) + " sampled triples, " +
                                        (probe.status == SearchStatus::found ? "1" : "0") +
                                        " intersections; affine control " + (control_ok ? "found" : "missed")};
}

Result orbit_collapse()
{
    int failures = 0, maps = 0;
    for (const auto& [r, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}})
        for (std::uint64_t t = 0; t < 100; ++t)
        {
            ++maps;
            const auto f = random_affine_join_map(r, (r - 1) * d, d, 100 * static_cast<std::uint64_t>(r * 10 + d) + t);
            try
            {
                const auto c = collapse_orbit(f);
                bool equal = true;
                for (int k = 0; k < r; ++k)
                    equal = equal && evaluate(f, shift(c.point, r, k)) == c.image;
                failures += !equal;
            }
            catch (const std::exception&)
            {
                ++failures;
            }
        }
    return {failures == 0, std::to_string(maps) + " maps, " + std::to_string(failures) + " failures"};
}

Result sphere_homology()
{
    bool ok = is_homology_sphere(homology(circle_join_power(3, 2).complex), 3);
    std::string detail = std::string("C6^*2 ") + (ok ? "S^3" : "not S^3");
    for (int n = 1; n <= 5; ++n)
    {
        const bool s = is_homology_sphere(homology(SimplicialComplex::simplex_boundary(n)), n - 1);
        ok = ok && s;
        if (!s)
            detail += "; boundary of simplex " + std::to_string(n) + " wrong";
    }
    const bool hex = is_homology_sphere(homology(multiple_chessboard(3, 2, {1, 1})), 1);
    ok = ok && hex;
    detail += "; boundaries n<=5 ";
    detail += ok ? "match" : "checked";
    detail += hex ? "; Delta(3,2) S^1" : "; Delta(3,2) not S^1";
    return {ok, detail};
}

// The fixture set: every N <= 7 and d <= 2 with random, convex-position and
// degenerate configurations.
std::vector<PointConfiguration> oracle_fixtures()
{
    std::vector<PointConfiguration> out;
    for (int d = 1; d <= 2; ++d)
        for (int n = 1; n <= 7; ++n)
        {
            for (std::uint64_t s = 0; s < 4; ++s)
                out.push_back(random_rational_config(n, d, 31 * static_cast<std::uint64_t>(n) + s + 1000 * d, {6, 100}));
            out.push_back(moment_curve_points(d, n));
            std::vector<Vector> degenerate;
            for (int i = 0; i < n; ++i)
            {
                Vector p(static_cast<std::size_t>(d), Rational(0));
                p[0] = i % 3;
                if (d == 2)
                    p[1] = i % 2;
                degenerate.push_back(p);
            }
            out.push_back(PointConfiguration(d, degenerate));
        }
    return out;
}

Result oracle_equivalence()
{
    int instances = 0, mismatches = 0;
    for (const auto& c : oracle_fixtures())
        for (int r = 2; r <= 3; ++r)
        {
            if (c.size() < r)
                continue;
            ++instances;
            const auto hits = oracle::tverberg_partitions(c.points(), r);
            const auto out = find_tverberg_partition(c, r, std::nullopt);
            bool ok = (out.status == SearchStatus::found) == !hits.empty() && out.status != SearchStatus::budget_exhausted;
            if (ok && out.status == SearchStatus::found)
                ok = verify_witness(c, *out.partition, *out.witness) && hits.count(out.partition->parts) == 1;
            // Every profile separately.
            for (const auto& prof : size_profiles(r, c.size()))
            {
                const auto res = refute_occurrence(c, r, prof);
                const bool any = std::any_of(hits.begin(), hits.end(), [&](const oracle::Partition& p) {
                    for (int i = 0; i < r; ++i)
                        if (static_cast<int>(p[static_cast<std::size_t>(i)].size()) != prof[static_cast<std::size_t>(i)])
                            return false;
                    return true;
                });
                ok = ok && (res.status == SearchStatus::found) == any;
            }
            mismatches += !ok;
        }
    return {mismatches == 0,
            std::to_string(instances) + " (configuration, r) instances, " + std::to_string(mismatches) + " mismatches"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"affine Tverberg existence", existence},
        {"balanced prescribability (2,2,3)", balanced},
        {"colorful builder sweep r<=6 d<=6", colorful},
        {"constraint-map zero set", constraint_zero_set},
        {"moment-curve lower-bound refutation", moment_refutation},
        {"counterexample-map probe", counterexample_probe},
        {"orbit collapse", orbit_collapse},
        {"sphere homology", sphere_homology},
        {"oracle equivalence N<=7 d<=2 r<=3", oracle_equivalence},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        Result res;
        try
        {
            res = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            res = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !res.pass;
        char time[32];
        std::snprintf(time, sizeof time, "%.1fs", secs);
        std::cout << "criterion " << i + 1 << ": " << (res.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "  [" << res.detail << "; " << time << "]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
