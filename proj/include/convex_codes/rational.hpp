#ifndef CONVEX_CODES_RATIONAL_HPP
#define CONVEX_CODES_RATIONAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace convex_codes {

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Vector = std::vector<Rational>;

inline Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline int sign(const Rational& x)
{
    return x.sign();
}

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

/// Always "num/den", e.g. "3/1", "-1/2".
inline std::string format_rational(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Accepts "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("+-0123456789") != std::string::npos ||
            t.find_first_of("0123456789") == std::string::npos)
            throw std::invalid_argument("malformed rational '" + s + "'");
        return Integer(t[0] == '+' ? t.substr(1) : t);
    };
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    const Integer den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
}

inline std::string format_vector(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

/// Rational r with r >= sqrt(x) (x >= 0), within a relative 2^-40 or so.
inline Rational sqrt_upper(const Rational& x)
{
    if (x <= 0)
        return 0;
    const double approx = std::sqrt(x.convert_to<double>());
    Rational r(approx);
    r *= Rational(1'000'001, 1'000'000);
    while (r * r < x)
        r *= 2;
    return r;
}

/// Rational r with 0 <= r <= sqrt(x).
inline Rational sqrt_lower(const Rational& x)
{
    if (x <= 0)
        return 0;
    const double approx = std::sqrt(x.convert_to<double>());
    Rational r(approx);
    r *= Rational(999'999, 1'000'000);
    while (r * r > x)
        r /= 2;
    return r;
}

} // namespace convex_codes

#endif
