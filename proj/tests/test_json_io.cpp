#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/json_io.hpp"

using namespace tverberg;

TEST_CASE("vectors serialise rationals as strings")
{
    const Vector v{Rational(-3, 4), Rational(5), Rational(0)};
    const Json j = to_json(v);
    CHECK(j.dump() == R"(["-3/4","5","0"])");
    CHECK(vector_from_json(j) == v);
    CHECK(vector_from_json(Json::parse(R"([2, "1/2"])")) == Vector{Rational(2), Rational(1, 2)});
    CHECK_THROWS(vector_from_json(Json::parse(R"(["1/0"])")));
}

TEST_CASE("partitions and tuples round-trip")
{
    const IndexPartition p{7, {{1}, {2, 4}, {6, 7}}};
    CHECK(to_json(p).dump() == "[[1],[2,4],[6,7]]");
    CHECK(partition_from_json(to_json(p), 7) == p);
    CHECK_THROWS(partition_from_json(Json::parse("[[1],[1]]"), 3));

    const DimensionTuple t(4, 3, {1, 2, 3, 3});
    CHECK(to_json(t) == Json::parse(R"({"r":4,"d":3,"dims":[1,2,3,3]})"));
    CHECK(tuple_from_json(to_json(t)) == t);
}

TEST_CASE("configurations and witnesses round-trip")
{
    const auto c = random_rational_config(5, 3, 1);
    CHECK(configuration_from_json(to_json(c)) == c);

    IntersectionWitness w;
    w.point = {Rational(1, 3)};
    w.coefficients = {{{1, Rational(1, 2)}, {3, Rational(1, 2)}}, {{2, Rational(1)}}};
    const Json j = to_json(w);
    CHECK(j["coefficients"][0]["1"] == "1/2");
    const auto back = witness_from_json(j);
    CHECK(back.point == w.point);
    CHECK(back.coefficients == w.coefficients);
}

TEST_CASE("complexes round-trip by labels")
{
    for (const auto& k : {fixture::projective_plane(), multiple_chessboard(3, 2, {1, 1}),
                          barycentric_subdivision(SimplicialComplex::simplex(2)), circle_join_power(3, 2).complex})
        CHECK(complex_from_json(to_json(k)) == k);
    const Json hex = to_json(multiple_chessboard(3, 2, {1, 1}));
    CHECK(hex["facets"][0] == Json::parse(R"j(["(1,1)","(2,2)"])j"));
}

TEST_CASE("homology reports state the reduced convention")
{
    HomologyResult h{0, {0, 0, 0, 0}, {{}, {}, {Integer(2)}, {}}};
    const Json j = to_json(h);
    CHECK(j["coefficients"] == "Z");
    CHECK(j["reduced"] == true);
    CHECK(j["dimensions"] == Json::parse("[-1,0,1,2]"));
    CHECK(j["torsion"][2][0] == "2");
}

TEST_CASE("search outcomes carry status, stats and exact witnesses")
{
    SearchOutcome o;
    o.status = SearchStatus::found;
    o.partition = IndexPartition{3, {{2}, {1, 3}}};
    o.witness = IntersectionWitness{{Rational(1)}, {{{2, Rational(1)}}, {{1, Rational(1, 2)}, {3, Rational(1, 2)}}}};
    o.stats = {4, 4};
    const Json j = to_json(o);
    CHECK(j["status"] == "found");
    CHECK(j["stats"]["partitions_examined"] == 4);
    CHECK(j["witness"]["point"] == Json::parse(R"(["1"])"));
    CHECK(j["sampled"] == false);

    SearchOutcome none;
    CHECK(to_json(none)["partition"].is_null());
}

TEST_CASE("PL maps and join maps round-trip")
{
    const auto g = random_rational_config(4, 1, 5);
    const auto f = build_counterexample_map(3, 2, 1, g);
    const auto back = pl_map_from_json(to_json(f));
    CHECK(back.values() == f.values());
    CHECK(back.n() == 3);

    const auto m = random_affine_join_map(3, 2, 1, 9);
    const auto m2 = join_map_from_json(to_json(m));
    CHECK(m2.r == m.r);
    CHECK(m2.n == m.n);
    CHECK(m2.d == m.d);
    CHECK(m2.values == m.values);
}

TEST_CASE("constraint verification report")
{
    const auto v = verify_constraint_zero_set(3, DimensionTuple(2, 1, {0, 1}));
    const Json j = to_json(v);
    CHECK(j["passed"] == true);
    CHECK(j["join_faces"] == 80);
    CHECK(to_json(JoinFace{{{1, 2}, {}}}) == Json::parse("[[1,2],[]]"));
}
