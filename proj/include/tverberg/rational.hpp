/**
 * Exact rational scalars and small helpers shared by every module.
 *
 * All coordinates, barycentric weights and LP values are stored as GMP
 * rationals in lowest terms; nothing in this library rounds.
 */
#ifndef TVERBERG_RATIONAL_HPP
#define TVERBERG_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tverberg {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Vector = std::vector<Rational>;

/**
 * Parse `p/q` or a plain integer (optional sign) into a canonical rational.
 *
 * Throws std::invalid_argument on malformed text or a zero denominator.
 */
Rational parse_rational(std::string_view text);

/** Canonical text form: `p/q`, or `p` when the denominator is 1. */
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
Rational squared_norm(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

} // namespace tverberg

#endif
