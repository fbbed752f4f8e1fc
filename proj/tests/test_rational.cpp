#include <catch_amalgamated.hpp>

#include "tverberg/rational.hpp"

using namespace tverberg;

TEST_CASE("parse_rational canonicalises fractions")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("+3/6")) == "1/2");
    CHECK(to_string(parse_rational(" -3/6 ")) == "-1/2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("parse_rational rejects malformed text")
{
    for (const char* bad : {"", "1/0", "a", "1.5", "1//2", "/3", "2/", "3/-6", "1 2"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("stored values are in lowest terms with positive denominator")
{
    const Rational x = parse_rational("-14/21");
    CHECK(numerator(x) == -2);
    CHECK(denominator(x) == 3);
    CHECK(parse_rational(to_string(x)) == x);
}

TEST_CASE("vector helpers are exact")
{
    const Vector a{Rational(1, 3), Rational(2)};
    const Vector b{Rational(2, 3), Rational(-1)};
    CHECK(dot(a, b) == Rational(-16, 9));
    CHECK(squared_norm(a) == Rational(37, 9));
    CHECK((a + b) == Vector{Rational(1), Rational(1)});
    CHECK((a - b) == Vector{Rational(-1, 3), Rational(3)});
    CHECK((Rational(3) * a) == Vector{Rational(1), Rational(6)});
    CHECK(to_strings(a) == std::vector<std::string>{"1/3", "2"});
}
