#include "k3lat/integer.hpp"

#include <limits>

#include <boost/multiprecision/miller_rabin.hpp>

#include "k3lat/error.hpp"

namespace k3lat {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) fail_invalid("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer m = abs(b);
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Integer ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

Integer isqrt(const Integer& n) {
  if (n < 0) fail_invalid("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

int valuation(Integer n, const Integer& p) {
  if (n == 0) fail_invalid("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < Integer(1) << 40) {
    for (Integer d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 40);
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) fail_invalid("prime divisors of zero");
  std::vector<Integer> out;
  Integer m = abs(n);
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_cube_free(const Integer& n) {
  for (const Integer& p : prime_divisors(n)) {
    if (valuation(n, p) >= 3) return false;
  }
  return true;
}

int legendre(const Integer& a, const Integer& p) {
  Integer r = mod_floor(a, p);
  if (r == 0) return 0;
  // Euler's criterion.
  Integer e = (p - 1) / 2;
  Integer result = boost::multiprecision::powm(r, e, p);
  return result == 1 ? 1 : -1;
}

Integer pow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  std::size_t end = text.size();
  while (end > i && text[end - 1] == ' ') --end;
  text = text.substr(i, end - i);
  bool negative = false;
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos >= text.size()) fail_invalid("expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') fail_invalid("expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail_invalid("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace k3lat
