#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3lat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// g = x*a + y*b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Rounding division for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
// Representative of a mod b in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Largest r with r*r <= n, for n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

// p-adic valuation of a nonzero integer.
int valuation(Integer n, const Integer& p);

bool is_prime(const Integer& n);
// Distinct prime divisors of |n| in increasing order; n != 0.
std::vector<Integer> prime_divisors(const Integer& n);
bool is_cube_free(const Integer& n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

Integer pow(const Integer& base, unsigned exponent);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

// Parse a decimal integer ("-23", "+7"); throws InvalidArgument.
Integer parse_integer(std::string_view text);
// Parse "p/q" or a decimal integer; throws InvalidArgument.
Rational parse_rational(std::string_view text);

bool fits_int64(const Integer& x);

}  // namespace k3lat
