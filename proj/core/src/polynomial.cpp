#include "k3lat/polynomial.hpp"

#include <algorithm>

#include "k3lat/error.hpp"

namespace k3lat {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integral(x); });
}

std::vector<Integer> Polynomial::integer_coefficients() const {
  if (!has_integer_coefficients()) fail_invalid("polynomial " + to_string(*this) + " has non-integer coefficients");
  std::vector<Integer> out;
  for (const auto& x : c_) out.push_back(numerator(x));
  return out;
}

PolyDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail_invalid("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[k] / lead;
    q[k - db] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b[i];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divide(a, b).remainder; }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p[i] * i;
  return Polynomial(std::move(c));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.leading());
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  Polynomial g = gcd(p, derivative(p));
  Polynomial q = divide(p, g).quotient;
  return q.scaled(1 / q.leading());
}

std::size_t sign_changes(const Polynomial& p) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail_invalid("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<Polynomial> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    Polynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](bool plus_infinity) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& q : seq) {
      int s = sign(q.leading());
      if (!plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d * d != m) out.push_back(m / d);
  }
  return out;
}

bool has_integer_root(const std::vector<Integer>& c) {
  if (c[0] == 0) return true;
  Polynomial p = Polynomial::from_integers(c);
  for (const auto& d : divisors(c[0])) {
    if (p(Rational(d)) == 0 || p(Rational(-d)) == 0) return true;
  }
  return false;
}

// x^4 + a x^3 + b x^2 + c x + e = (x^2 + s x + q)(x^2 + r x + t) over Z.
bool has_quadratic_factor(const std::vector<Integer>& co) {
  const Integer& e = co[0];
  const Integer& c = co[1];
  const Integer& b = co[2];
  const Integer& a = co[3];
  for (const auto& d : divisors(e)) {
    for (const Integer& q : {d, Integer(-d)}) {
      Integer t = e / q;
      // s + r = a, s r = b - q - t
      Integer disc = a * a - 4 * (b - q - t);
      if (disc < 0 || !is_square(disc)) continue;
      Integer root = isqrt(disc);
      if ((a + root) % 2 != 0) continue;
      Integer s = (a + root) / 2, r = (a - root) / 2;
      if (s * t + r * q == c || r * t + s * q == c) return true;
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const Polynomial& p) {
  if (!p.is_monic() || !p.has_integer_coefficients()) {
    fail_invalid("is_irreducible: expects a monic integer polynomial");
  }
  if (p.degree() < 1) return false;
  if (p.degree() > 4) fail_precondition("is_irreducible: degree above 4 is not supported");
  if (p.degree() == 1) return true;
  std::vector<Integer> c = p.integer_coefficients();
  if (has_integer_root(c)) return false;
  if (p.degree() <= 3) return true;
  return !has_quadratic_factor(c);
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) fail_invalid("characteristic_polynomial: matrix must be square");
  const std::size_t n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RationalMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial cyclotomic_polynomial(unsigned m) {
  if (m == 0) fail_invalid("cyclotomic_polynomial: m must be positive");
  Polynomial p = Polynomial::monomial(m) - Polynomial{1};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) p = divide(p, cyclotomic_polynomial(d)).quotient;
  }
  return p;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace k3lat
