#include <catch_amalgamated.hpp>

#include <bit>

#include "tverberg/errors.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/pl_map.hpp"

using namespace tverberg;

namespace {

PointConfiguration line_points(std::initializer_list<long> xs)
{
    std::vector<Vector> pts;
    for (long x : xs)
        pts.push_back({Rational(x)});
    return PointConfiguration(1, pts);
}

Vector barycenter_of(FaceMask face, int n)
{
    Vector x(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int l : face_labels(face))
        x[l - 1] = Rational(1, std::popcount(face));
    return x;
}

} // namespace

TEST_CASE("face masks and labels are inverse")
{
    CHECK(face_labels(0b1011) == IndexSet{1, 2, 4});
    CHECK(face_mask({1, 2, 4}) == 0b1011);
    CHECK(face_labels(0).empty());
    CHECK_THROWS_AS(face_mask({0}), InvalidInput);
}

TEST_CASE("counterexample map on a triangle")
{
    const auto g = line_points({0, 3, 6});
    const auto f = build_counterexample_map(2, 2, 1, g);
    for (int v = 0; v < 3; ++v)
        CHECK(f.value(FaceMask{1} << v) == Vector{Rational(3 * v), Rational(0)});
    CHECK(f.value(0b111) == Vector{Rational(3), Rational(1, 6)});
    for (FaceMask edge : {0b011u, 0b101u, 0b110u})
        CHECK(f.value(edge).back() == 0);
    CHECK(f.value(0b011).front() == Rational(3, 2));
}

TEST_CASE("evaluation at vertices, barycenters and a midpoint")
{
    const auto g = line_points({0, 3, 6});
    const auto f = build_counterexample_map(2, 2, 1, g);
    for (FaceMask m = 1; m < 8; ++m)
        CHECK(evaluate_pl_map(f, barycenter_of(m, 2)) == f.value(m));
    const Vector mid{Rational(2, 3), Rational(1, 6), Rational(1, 6)};
    Vector expected = f.value(0b001) + f.value(0b111);
    for (auto& c : expected)
        c /= 2;
    CHECK(evaluate_pl_map(f, mid) == expected);
    CHECK_THROWS_AS(evaluate_pl_map(f, Vector{Rational(1), Rational(0)}), InvalidInput);
}

TEST_CASE("counterexample map input validation")
{
    const auto g = line_points({0, 3, 6});
    CHECK_THROWS_AS(build_counterexample_map(2, 1, 0, g), InvalidInput);
    CHECK_THROWS_AS(build_counterexample_map(3, 2, 1, g), InvalidInput);
    CHECK_THROWS_AS(build_counterexample_map(2, 3, 1, g), InvalidInput);
}

TEST_CASE("last coordinate vanishes exactly on the d1-skeleton")
{
    for (int n = 2; n <= 5; ++n)
        for (int d1 = 0; d1 < n; ++d1)
        {
            const auto g = random_rational_config(n + 1, 1, static_cast<std::uint64_t>(n * 10 + d1));
            const auto f = build_counterexample_map(n, 2, d1, g);
            for (FaceMask m = 1; m < (FaceMask{1} << (n + 1)); ++m)
            {
                const int dim = std::popcount(m) - 1;
                CHECK((f.value(m).back() == 0) == (dim <= d1));
                CHECK(f.value(m).back() >= 0);
            }
            SplitMix64 rng(static_cast<std::uint64_t>(n * 7 + d1));
            for (int t = 0; t < 30; ++t)
            {
                // A random point with support of size at most d1 + 1.
                Vector x(static_cast<std::size_t>(n) + 1, Rational(0));
                std::int64_t total = 0;
                for (int k = 0; k <= d1; ++k)
                {
                    const std::int64_t w = rng.between(1, 9);
                    x[rng.below(static_cast<std::uint64_t>(n) + 1)] += w;
                    total += w;
                }
                for (auto& c : x)
                    c /= total;
                CHECK(evaluate_pl_map(f, x).back() == 0);
            }
        }
}

TEST_CASE("affine maps are affine on every face")
{
    const auto g = random_rational_config(5, 2, 3);
    const auto f = affine_pl_map(g);
    CHECK(f.affine_on(0b11111));
    CHECK(evaluate_pl_map(f, Vector{Rational(1, 2), Rational(1, 4), Rational(1, 4), 0, 0}) ==
          Vector{(2 * g.point(1)[0] + g.point(2)[0] + g.point(3)[0]) / 4,
                 (2 * g.point(1)[1] + g.point(2)[1] + g.point(3)[1]) / 4});
    const auto h = build_counterexample_map(4, 3, 1, g);
    CHECK(h.affine_on(0b00011));
    CHECK_FALSE(h.affine_on(0b00111));
}

TEST_CASE("distinct vertex images never coincide")
{
    const auto g = line_points({0, 1, 5, 7});
    const auto f = build_counterexample_map(3, 2, 1, g);
    const auto out = search_map_violation(f, 2, DimensionTuple(2, 2, {0, 0}));
    CHECK(out.status == SearchStatus::exhausted_none);
    CHECK_FALSE(out.sampled);
    CHECK(out.stats.partitions_examined == 6);
}

TEST_CASE("affine control with balanced dimensions finds a witness")
{
    // N = (r-1)(d+2) with r = 3, d = 2.
    const auto g = random_rational_config(9, 2, 7);
    const auto f = affine_pl_map(g);
    const auto dims = balanced_tuple(3, 2);
    const auto out = search_map_violation(f, 3, dims, {.budget = 100000, .workers = 1, .seed = 0});
    REQUIRE(out.status == SearchStatus::found);
    CHECK(verify_map_witness(f, *out.partition, *out.witness));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(static_cast<int>(out.partition->parts[i].size()) == dims.dims()[i] + 1);
}

TEST_CASE("witnesses of the counterexample map evaluate back to the common point")
{
    // With d1 = 2 the map is affine on all faces that the search visits.
    const auto g = random_rational_config(7, 2, 12);
    const auto f = build_counterexample_map(6, 3, 2, g);
    const auto out = search_map_violation(f, 2, DimensionTuple(2, 3, {1, 2}));
    REQUIRE(out.status == SearchStatus::found);
    CHECK(verify_map_witness(f, *out.partition, *out.witness));
    for (std::size_t i = 0; i < 2; ++i)
    {
        Vector x(7, Rational(0));
        for (const auto& [label, w] : out.witness->coefficients[i])
            x[static_cast<std::size_t>(label - 1)] = w;
        CHECK(evaluate_pl_map(f, x) == out.witness->point);
    }
    auto bad = *out.witness;
    bad.point.back() += 1;
    CHECK_FALSE(verify_map_witness(f, *out.partition, bad));
}

TEST_CASE("map search is independent of the worker count")
{
    const auto g = random_rational_config(8, 2, 21);
    const auto f = build_counterexample_map(7, 3, 1, g);
    const DimensionTuple dims(3, 3, {1, 1, 2});
    for (std::uint64_t budget : {50ull, 2000ull})
    {
        const auto one = search_map_violation(f, 3, dims, {.budget = budget, .workers = 1, .seed = 4});
        for (unsigned w : {2u, 4u})
        {
            const auto many = search_map_violation(f, 3, dims, {.budget = budget, .workers = w, .seed = 4});
            CHECK(many.status == one.status);
            CHECK(many.sampled == one.sampled);
            CHECK(many.partition == one.partition);
            CHECK(many.stats.partitions_examined == one.stats.partitions_examined);
            CHECK(many.stats.lps_solved == one.stats.lps_solved);
        }
    }
}

TEST_CASE("map search input validation")
{
    const auto f = affine_pl_map(line_points({0, 1, 2}));
    CHECK_THROWS_AS(search_map_violation(f, 2, DimensionTuple(3, 1, {0, 0, 0})), InvalidInput);
    CHECK_THROWS_AS(search_map_violation(f, 2, DimensionTuple(2, 1, {1, 1})), InvalidInput);
    CHECK_THROWS_AS(search_map_violation(f, 2, DimensionTuple(2, 1, {0, 0}), {.budget = 0}), InvalidInput);
}
