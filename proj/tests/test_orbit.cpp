#include <catch_amalgamated.hpp>

#include "tverberg/errors.hpp"
#include "tverberg/orbit.hpp"
#include "tverberg/random.hpp"

using namespace tverberg;

namespace {

void check_selection(const std::vector<std::vector<Vector>>& sets, const ColorfulSelection& s)
{
    const std::size_t d = sets[0][0].size();
    REQUIRE(s.choice.size() == sets.size());
    REQUIRE(s.coefficients.size() == sets.size());
    Vector sum(d, Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
    {
        REQUIRE(s.choice[i] < sets[i].size());
        CHECK(s.coefficients[i] >= 0);
        total += s.coefficients[i];
        for (std::size_t c = 0; c < d; ++c)
            sum[c] += s.coefficients[i] * sets[i][s.choice[i]][c];
    }
    CHECK(total == 1);
    CHECK(sum == Vector(d, Rational(0)));
    REQUIRE_FALSE(s.potentials.empty());
    CHECK(s.potentials.back() == 0);
    CHECK(s.potentials.size() == s.pivots + 1);
    for (std::size_t k = 0; k + 1 < s.potentials.size(); ++k)
        CHECK(s.potentials[k] > s.potentials[k + 1]);
}

void check_collapse(const AffineJoinMap& f, const OrbitCollapse& c)
{
    REQUIRE(static_cast<int>(c.point.lambda.size()) == f.n + 1);
    Rational total = 0;
    for (const auto& l : c.point.lambda)
    {
        CHECK(l >= 0);
        total += l;
    }
    CHECK(total == 1);
    for (int k = 0; k < f.r; ++k)
    {
        const JoinPoint y = shift(c.point, f.r, k);
        CHECK(y.lambda == c.point.lambda);
        CHECK(evaluate(f, y) == c.image);
        // Points of the orbit sit in pairwise disjoint faces.
        for (int k2 = k + 1; k2 < f.r; ++k2)
        {
            const JoinPoint z = shift(c.point, f.r, k2);
            for (std::size_t j = 0; j < y.symbol.size(); ++j)
                if (c.point.lambda[j] != 0)
                    CHECK(y.symbol[j] != z.symbol[j]);
        }
    }
}

} // namespace

TEST_CASE("colorful Caratheodory on the line")
{
    const std::vector<std::vector<Vector>> sets{{{Rational(-1)}, {Rational(1)}}, {{Rational(-2)}, {Rational(2)}}};
    const auto s = colorful_caratheodory(sets);
    check_selection(sets, s);
    CHECK(s.choice == std::vector<std::size_t>{0, 1});
    CHECK(s.coefficients == Vector{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("colorful Caratheodory with three copies of a triangle")
{
    const std::vector<Vector> tri{{Rational(2), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(-1), Rational(-1)}};
    const std::vector<std::vector<Vector>> sets{tri, tri, tri};
    check_selection(sets, colorful_caratheodory(sets));
}

TEST_CASE("colorful Caratheodory rejects a set missing the origin")
{
    const std::vector<std::vector<Vector>> sets{{{Rational(1)}, {Rational(2)}}, {{Rational(-1)}, {Rational(1)}}};
    CHECK_THROWS_AS(colorful_caratheodory(sets), InvalidInput);
    const std::vector<std::vector<Vector>> one_set{{Vector{Rational(0)}}};
    CHECK_THROWS_AS(colorful_caratheodory(one_set), InvalidInput);
}

TEST_CASE("colorful Caratheodory on random capturing sets")
{
    SplitMix64 rng(17);
    for (int trial = 0; trial < 60; ++trial)
    {
        const std::size_t d = 1 + rng.below(3);
        std::vector<std::vector<Vector>> sets(d + 1);
        for (auto& set : sets)
        {
            // k random points plus minus their sum: the mean is the origin.
            const std::size_t k = 1 + rng.below(3);
            Vector neg(d, Rational(0));
            for (std::size_t i = 0; i < k; ++i)
            {
                Vector p(d);
                for (auto& c : p)
                    c = Rational(rng.between(-9, 9), rng.between(1, 4));
                for (std::size_t c = 0; c < d; ++c)
                    neg[c] -= p[c];
                set.push_back(p);
            }
            set.insert(set.begin() + static_cast<std::ptrdiff_t>(rng.below(k + 1)), neg);
        }
        check_selection(sets, colorful_caratheodory(sets));
    }
}

TEST_CASE("nearest point to the origin satisfies the optimality condition")
{
    SplitMix64 rng(2);
    for (int trial = 0; trial < 80; ++trial)
    {
        const std::size_t d = 1 + rng.below(3);
        std::vector<Vector> pts(1 + rng.below(5));
        for (auto& p : pts)
        {
            p.resize(d);
            for (auto& c : p)
                c = Rational(rng.between(-6, 6), rng.between(1, 3));
        }
        const auto [p, w] = nearest_point_to_origin(pts);
        Vector sum(d, Rational(0));
        Rational total = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            CHECK(w[i] >= 0);
            total += w[i];
            for (std::size_t c = 0; c < d; ++c)
                sum[c] += w[i] * pts[i][c];
        }
        CHECK(total == 1);
        CHECK(sum == p);
        for (const auto& x : pts)
            CHECK(dot(x, p) >= dot(p, p));
    }
}

TEST_CASE("collapse of the 0,1,1,0 map on [2]^{*2}")
{
    AffineJoinMap f{2, 1, 1, {{Rational(0)}, {Rational(1)}, {Rational(1)}, {Rational(0)}}};
    const auto c = collapse_orbit(f);
    check_collapse(f, c);
    CHECK(c.image == Vector{Rational(1, 2)});
}

TEST_CASE("a constant map collapses every orbit")
{
    AffineJoinMap f{3, 2, 1, std::vector<Vector>(9, Vector{Rational(5, 2)})};
    const auto c = collapse_orbit(f);
    check_collapse(f, c);
    CHECK(c.image == Vector{Rational(5, 2)});
}

TEST_CASE("composite r = 4 in the plane")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        const auto f = random_affine_join_map(4, 8, 2, seed);
        check_collapse(f, collapse_orbit(f));
    }
}

TEST_CASE("collapse across small (r, d) with extra unused columns")
{
    for (int r = 2; r <= 5; ++r)
        for (int d = 1; d <= 2; ++d)
        {
            const int n = (r - 1) * d + 1;
            const auto f = random_affine_join_map(r, n, d, static_cast<std::uint64_t>(r * 10 + d), 7);
            const auto c = collapse_orbit(f);
            check_collapse(f, c);
            CHECK(c.point.lambda.back() == 0);
        }
}

TEST_CASE("join maps validate their input")
{
    const auto f = random_affine_join_map(3, 2, 1, 0);
    CHECK(f.values.size() == 9);
    CHECK(f.value(1, 2) == f.values[4]);
    CHECK_THROWS_AS(evaluate(f, JoinPoint{{Rational(1), Rational(0)}, {1, 1}}), InvalidInput);
    CHECK_THROWS_AS(evaluate(f, JoinPoint{{Rational(1), Rational(0), Rational(0)}, {1, 4, 1}}), InvalidInput);
    CHECK_THROWS_AS(evaluate(f, JoinPoint{{Rational(2), Rational(-1), Rational(0)}, {1, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(collapse_orbit(random_affine_join_map(3, 1, 1, 0)), InvalidInput);
    CHECK(shift(JoinPoint{{Rational(1)}, {3}}, 3).symbol == std::vector<int>{1});
}
