#include "tverberg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tverberg {

namespace {

bool is_integer_text(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
    {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    std::string owned(s.front() == '+' ? s.substr(1) : s);
    return Integer(owned);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer q = parse_integer(den);
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    // mpq_rational(num, den) canonicalizes
    return Rational(parse_integer(num), q);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

std::vector<std::string> to_strings(const Vector& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational squared_norm(const Vector& v)
{
    return dot(v, v);
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector subtract: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Vector operator*(const Rational& s, const Vector& v)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

} // namespace tverberg
