#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "tverberg/complex.hpp"
#include "tverberg/errors.hpp"

using namespace tverberg;

namespace {

// Vertex degrees in the 1-skeleton.
std::vector<int> degrees(const SimplicialComplex& k)
{
    std::vector<int> deg(static_cast<std::size_t>(k.vertex_count()), 0);
    const auto faces = k.faces();
    if (faces.size() > 2)
        for (const auto& e : faces[2])
        {
            ++deg[static_cast<std::size_t>(e[0])];
            ++deg[static_cast<std::size_t>(e[1])];
        }
    return deg;
}

bool is_cycle(const SimplicialComplex& k, int length)
{
    if (k.vertex_count() != length || k.dimension() != 1 || static_cast<int>(k.facets().size()) != length)
        return false;
    const auto deg = degrees(k);
    if (!std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; }))
        return false;
    // Walk from vertex 0; a single cycle returns after `length` steps.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(length));
    for (const auto& e : k.facets())
    {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    int prev = -1, cur = 0, steps = 0;
    do
    {
        const int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                       : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 0 && steps <= length);
    return steps == length;
}

SimplicialComplex points(std::vector<std::string> labels)
{
    std::vector<Face> facets;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        facets.push_back({i});
    return SimplicialComplex(std::move(labels), std::move(facets));
}

// Maximal rook placements whose sorted column counts are bounded by sorted k.
std::set<Face> symmetric_facets_brute(int m, int n, std::vector<int> k)
{
    std::sort(k.begin(), k.end());
    std::vector<Face> faces;
    std::vector<int> column(static_cast<std::size_t>(m), -1);
    std::int64_t total = 1;
    for (int i = 0; i < m; ++i)
        total *= n + 1;
    for (std::int64_t code = 0; code < total; ++code)
    {
        std::int64_t c = code;
        std::vector<int> counts(static_cast<std::size_t>(n), 0);
        Face f;
        for (int i = 0; i < m; ++i, c /= n + 1)
            if (c % (n + 1))
            {
                const int j = static_cast<int>(c % (n + 1)) - 1;
                ++counts[static_cast<std::size_t>(j)];
                f.push_back(i * n + j);
            }
        std::sort(counts.begin(), counts.end());
        bool ok = true;
        for (int j = 0; j < n; ++j)
            ok = ok && counts[static_cast<std::size_t>(j)] <= k[static_cast<std::size_t>(j)];
        if (ok)
        {
            std::sort(f.begin(), f.end());
            faces.push_back(f);
        }
    }
    std::set<Face> maximal;
    for (const auto& f : faces)
    {
        const bool covered = std::any_of(faces.begin(), faces.end(), [&](const Face& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!covered)
            maximal.insert(f);
    }
    return maximal;
}

} // namespace

TEST_CASE("construction normalises the facet list")
{
    const SimplicialComplex k({"a", "b", "c"}, {{1, 0}, {0}, {0, 1}, {2}});
    CHECK(k.facets() == std::vector<Face>{{0, 1}, {2}});
    CHECK_FALSE(k.is_pure());
    CHECK(k.dimension() == 1);
    CHECK(k.contains({0}));
    CHECK(k.contains({}));
    CHECK_FALSE(k.contains({0, 2}));
    CHECK_THROWS_AS(SimplicialComplex({"a", "a"}, {{0}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 0}}), InvalidInput);
}

TEST_CASE("void and empty complexes")
{
    const SimplicialComplex none;
    CHECK(none.dimension() == -2);
    const SimplicialComplex empty({}, {Face{}});
    CHECK(empty.dimension() == -1);
    CHECK(empty.f_vector() == std::vector<Integer>{1});
    CHECK(empty.reduced_euler_characteristic() == -1);
}

TEST_CASE("simplices and their boundaries")
{
    const auto d2 = SimplicialComplex::simplex(2);
    CHECK(d2.facets() == std::vector<Face>{{0, 1, 2}});
    CHECK(d2.vertices() == std::vector<std::string>{"1", "2", "3"});
    CHECK(d2.f_vector() == std::vector<Integer>{1, 3, 3, 1});
    CHECK(d2.reduced_euler_characteristic() == 0);
    const auto b = SimplicialComplex::simplex_boundary(2);
    CHECK(is_cycle(b, 3));
    CHECK(b.reduced_euler_characteristic() == -1);
    CHECK(SimplicialComplex::simplex_boundary(0).dimension() == -1);
}

TEST_CASE("join of two 0-spheres is a 4-cycle")
{
    const auto j = join(points({"a", "b"}), points({"c", "d"}));
    CHECK(is_cycle(j, 4));
    CHECK_THROWS_AS(join(points({"a"}), points({"a"})), InvalidInput);
}

TEST_CASE("deleted joins of simplices")
{
    const auto s0 = deleted_join(SimplicialComplex::simplex(0), 2);
    CHECK(s0.vertex_count() == 2);
    CHECK(s0.facets() == std::vector<Face>{{0}, {1}});

    const auto c4 = deleted_join(SimplicialComplex::simplex(1), 2);
    CHECK(is_cycle(c4, 4));
    CHECK(c4.vertices() == std::vector<std::string>{"(1,1)", "(1,2)", "(2,1)", "(2,2)"});

    CHECK_THROWS_AS(deleted_join(SimplicialComplex::simplex(1), 1), InvalidInput);
    CHECK_THROWS_AS(deleted_join(SimplicialComplex::simplex(6), 3, 100), BudgetExceeded);
}

TEST_CASE("deleted join of a simplex is the join of discrete point sets")
{
    for (int n = 0; n <= 3; ++n)
        for (int r = 2; r <= 4; ++r)
        {
            const auto dj = deleted_join(SimplicialComplex::simplex(n), r);
            CHECK(dj.vertex_count() == r * (n + 1));
            std::size_t facets = 1;
            for (int i = 0; i <= n; ++i)
                facets *= static_cast<std::size_t>(r);
            CHECK(dj.facets().size() == facets);

            SimplicialComplex product({}, {Face{}});
            for (int v = 1; v <= n + 1; ++v)
            {
                std::vector<std::string> labels;
                for (int s = 1; s <= r; ++s)
                    labels.push_back("(" + std::to_string(v) + "," + std::to_string(s) + ")");
                product = join(product, points(labels));
            }
            CHECK(dj == product);
        }
}

TEST_CASE("multiple chessboard examples")
{
    const auto hex = multiple_chessboard(3, 2, {1, 1});
    CHECK(is_cycle(hex, 6));
    CHECK(hex.vertices()[1] == "(1,2)");

    const auto edge = multiple_chessboard(2, 1, {2});
    CHECK(edge.facets() == std::vector<Face>{{0, 1}});

    const auto two = multiple_chessboard(2, 2, {1, 1});
    CHECK(two.facets() == std::vector<Face>{{0, 3}, {1, 2}});

    CHECK_THROWS_AS(multiple_chessboard(2, 2, {1}), InvalidInput);
    CHECK_THROWS_AS(multiple_chessboard(2, 2, {0, 1}), InvalidInput);
}

TEST_CASE("symmetric multiple chessboard matches brute force")
{
    const auto sigma = symmetric_multiple_chessboard(4, 2, {1, 2});
    const std::set<Face> got(sigma.facets().begin(), sigma.facets().end());
    CHECK(got == symmetric_facets_brute(4, 2, {1, 2}));
    CHECK(got.size() == 24);

    for (const auto& [m, n, k] : std::vector<std::tuple<int, int, std::vector<int>>>{
             {5, 3, {1, 1, 2}}, {4, 3, {1, 2, 2}}, {6, 2, {2, 3}}, {5, 2, {1, 3}}})
    {
        const auto s = symmetric_multiple_chessboard(m, n, k);
        CHECK(std::set<Face>(s.facets().begin(), s.facets().end()) == symmetric_facets_brute(m, n, k));
    }
}

TEST_CASE("constant bounds make the symmetric complex the plain one")
{
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 2; ++k)
            {
                const std::vector<int> bounds(static_cast<std::size_t>(n), k);
                CHECK(symmetric_multiple_chessboard(m, n, bounds) == multiple_chessboard(m, n, bounds));
            }
}

TEST_CASE("symmetric chessboard membership")
{
    CHECK_FALSE(symmetric_chessboard_contains(15, {4, 4, 5}, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9, 10, 11}}));
    CHECK(symmetric_chessboard_contains(15, {4, 4, 5}, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9, 10}}));
    CHECK(symmetric_chessboard_contains(15, {4, 4, 5}, {{1, 2, 3, 4, 5}, {6}, {}}));
    CHECK_FALSE(symmetric_chessboard_contains(15, {4, 4, 5}, {{1, 2}, {2, 3}, {}}));
    CHECK(symmetric_chessboard_contains(4, {1, 2}, {{3, 4}, {1}}));
    CHECK_THROWS_AS(symmetric_chessboard_contains(4, {1, 2}, {{5}, {}}), InvalidInput);
    CHECK_THROWS_AS(symmetric_chessboard_contains(4, {1, 2}, {{1}}), InvalidInput);
}

TEST_CASE("barycentric subdivision examples")
{
    const auto path = barycentric_subdivision(SimplicialComplex::simplex(1));
    CHECK(path.vertex_count() == 3);
    CHECK(path.facets().size() == 2);
    CHECK(path.vertices() == std::vector<std::string>{"{1}", "{2}", "{1,2}"});

    CHECK(is_cycle(barycentric_subdivision(SimplicialComplex::simplex_boundary(2)), 6));

    const auto sd2 = barycentric_subdivision(SimplicialComplex::simplex(2));
    CHECK(sd2.facets().size() == 6);
    CHECK(sd2.vertex_count() == 7);
    CHECK(sd2.dimension() == 2);
}

TEST_CASE("circle join powers")
{
    const auto c4 = circle_join_power(2, 1);
    CHECK(is_cycle(c4.complex, 4));
    for (int v = 0; v < 4; ++v)
    {
        CHECK(c4.action[static_cast<std::size_t>(v)] != v);
        CHECK(c4.action[static_cast<std::size_t>(c4.action[static_cast<std::size_t>(v)])] == v);
    }

    const auto c6 = circle_join_power(3, 1);
    CHECK(is_cycle(c6.complex, 6));
    std::set<std::set<int>> orbits;
    for (int v = 0; v < 6; ++v)
    {
        std::set<int> orbit;
        int w = v;
        for (int k = 0; k < 3; ++k, w = c6.action[static_cast<std::size_t>(w)])
            orbit.insert(w);
        CHECK(w == v);
        orbits.insert(orbit);
    }
    CHECK(orbits.size() == 2);
    for (const auto& o : orbits)
        CHECK(o.size() == 3);

    const auto s3 = circle_join_power(3, 2);
    CHECK(s3.complex.vertex_count() == 12);
    CHECK(s3.complex.dimension() == 3);
    CHECK(s3.complex.facets().size() == 36);
    for (const auto* c : {&c4, &c6, &s3})
    {
        CHECK(c->embeds_as_subcomplex);
        CHECK(c->equivariant);
    }
    // The action maps facets to facets.
    std::set<Face> facets(s3.complex.facets().begin(), s3.complex.facets().end());
    for (const auto& f : s3.complex.facets())
    {
        Face g;
        for (int v : f)
            g.push_back(s3.action[static_cast<std::size_t>(v)]);
        std::sort(g.begin(), g.end());
        CHECK(facets.count(g) == 1);
    }
    CHECK_THROWS_AS(circle_join_power(1, 1), InvalidInput);
}
