#include "k3lat/cm_field.hpp"

#include <algorithm>

#include "k3lat/error.hpp"

namespace k3lat {

struct CMField::Impl {
  Polynomial min_poly;
  std::size_t n = 0;
  RationalMatrix conjugation;
  RationalMatrix basis;
  RationalMatrix basis_inverse;
  std::string description;
};

namespace {

Polynomial as_poly(const std::vector<Rational>& coords) { return Polynomial(coords); }

std::vector<Rational> to_coords(const Polynomial& p, std::size_t n) {
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n && static_cast<int>(i) <= p.degree(); ++i) c[i] = p[i];
  return c;
}

bool is_squarefree(const Integer& m) {
  for (const auto& q : prime_divisors(m)) {
    if (valuation(m, q) > 1) return false;
  }
  return true;
}

}  // namespace

CMField CMField::from_data(const Polynomial& min_poly, const RationalMatrix& conjugation,
                           const std::optional<RationalMatrix>& integral_basis) {
  if (!min_poly.is_monic() || !min_poly.has_integer_coefficients()) {
    fail_invalid("CM field: minimal polynomial must be monic with integer coefficients");
  }
  const int deg = min_poly.degree();
  if (deg != 2 && deg != 4) {
    fail_precondition("CM field: degree " + std::to_string(deg) + " is unsupported (only 2 and 4)");
  }
  if (!is_irreducible(min_poly)) fail_precondition("CM field: " + to_string(min_poly) + " is reducible");
  if (count_real_roots(min_poly) != 0) fail_precondition("CM field: " + to_string(min_poly) + " has real roots");
  const auto n = static_cast<std::size_t>(deg);
  if (conjugation.rows() != n || conjugation.cols() != n) fail_invalid("CM field: conjugation must be n x n");

  auto impl = std::make_shared<Impl>();
  impl->min_poly = min_poly;
  impl->n = n;
  impl->conjugation = conjugation;
  impl->basis = integral_basis ? *integral_basis : RationalMatrix::identity(n);
  impl->description = "Q[x]/(" + to_string(min_poly) + ")";
  if (impl->basis.rows() != n || impl->basis.cols() != n) fail_invalid("CM field: integral basis must be n x n");
  auto inv = inverse(impl->basis);
  if (!inv) fail_precondition("CM field: integral basis is singular");
  impl->basis_inverse = *inv;
  CMField field(impl);

  // column j must be c^j for c = conj(theta)
  CMElement c = field.from_coords(conjugation.column(1));
  CMElement power = field.one();
  for (std::size_t j = 0; j < n; ++j) {
    if (conjugation.column(j) != power.coords()) {
      fail_precondition("CM field: conjugation matrix is not a ring automorphism");
    }
    power = power * c;
  }
  CMElement value = field.zero();
  for (int k = deg; k >= 0; --k) value = value * c + field.from_rational(min_poly[k]);
  if (!value.is_zero()) fail_precondition("CM field: conjugation does not map theta to a root");
  if (!(conjugation * conjugation == RationalMatrix::identity(n))) {
    fail_precondition("CM field: conjugation is not an involution");
  }
  if (c == field.generator()) fail_precondition("CM field: conjugation is the identity");

  // Fixed field: half the degree and totally real.
  RationalMatrix shifted = conjugation - RationalMatrix::identity(n);
  if (rank(shifted) != n / 2) fail_precondition("CM field: fixed field does not have half the degree");
  if (n == 4) {
    CMElement y = field.generator() + c;
    if (y.is_rational()) y = field.generator() * c;
    if (y.is_rational()) fail_precondition("CM field: could not find a generator of the real subfield");
    Polynomial sf = squarefree_part(y.char_poly());
    if (count_real_roots(sf) != static_cast<std::size_t>(sf.degree())) {
      fail_precondition("CM field: real subfield is not totally real");
    }
  }

  // The integral basis must span a ring of integers containing Z[theta].
  for (std::size_t i = 0; i < n; ++i) {
    CMElement b = field.basis_element(i);
    if (!b.char_poly().has_integer_coefficients()) fail_precondition("CM field: integral basis has non-integral elements");
    for (std::size_t j = i; j < n; ++j) {
      if (!(b * field.basis_element(j)).is_integral()) {
        fail_precondition("CM field: integral basis is not closed under multiplication");
      }
    }
  }
  if (!field.generator().is_integral() || !field.one().is_integral()) {
    fail_precondition("CM field: integral basis does not contain Z[theta]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.basis_element(i).conj().is_integral()) {
      fail_precondition("CM field: integral basis is not stable under conjugation");
    }
  }
  return field;
}

CMField CMField::imaginary_quadratic(const Integer& m) {
  if (m >= 0) fail_precondition("imaginary quadratic field: m must be negative");
  if (!is_squarefree(m)) fail_precondition("imaginary quadratic field: m must be squarefree");
  if (mod_floor(m, 4) == 1) {
    // theta = (1 + sqrt(m)) / 2, conj(theta) = 1 - theta
    Polynomial f = Polynomial::from_integers({(1 - m) / 4, -1, 1});
    return from_data(f, RationalMatrix{{1, 1}, {0, -1}});
  }
  Polynomial f = Polynomial::from_integers({-m, 0, 1});
  return from_data(f, RationalMatrix{{1, 0}, {0, -1}});
}

CMField CMField::cyclotomic(unsigned m) {
  Polynomial f = cyclotomic_polynomial(m);
  if (f.degree() != 2 && f.degree() != 4) {
    fail_precondition("cyclotomic field: phi(" + std::to_string(m) + ") must be 2 or 4");
  }
  const auto n = static_cast<std::size_t>(f.degree());
  RationalMatrix conj(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // conj(theta^j) = theta^(m - j)
    Polynomial image = Polynomial::monomial((m - j) % m) % f;
    auto col = to_coords(image, n);
    for (std::size_t i = 0; i < n; ++i) conj(i, j) = col[i];
  }
  return from_data(f, conj);
}

std::size_t CMField::degree() const { return impl_->n; }
const Polynomial& CMField::min_poly() const { return impl_->min_poly; }
const RationalMatrix& CMField::conjugation() const { return impl_->conjugation; }
const RationalMatrix& CMField::integral_basis() const { return impl_->basis; }
std::string CMField::description() const { return impl_->description; }

CMElement CMField::zero() const { return CMElement(*this, std::vector<Rational>(impl_->n, Rational(0))); }

CMElement CMField::one() const { return from_rational(1); }

CMElement CMField::generator() const {
  std::vector<Rational> c(impl_->n, Rational(0));
  c[1] = 1;
  return CMElement(*this, std::move(c));
}

CMElement CMField::from_rational(const Rational& q) const {
  std::vector<Rational> c(impl_->n, Rational(0));
  c[0] = q;
  return CMElement(*this, std::move(c));
}

CMElement CMField::from_coords(std::vector<Rational> power_coords) const {
  if (power_coords.size() != impl_->n) fail_invalid("CM element: expected " + std::to_string(impl_->n) + " coordinates");
  return CMElement(*this, std::move(power_coords));
}

CMElement CMField::from_integral_coords(const std::vector<Integer>& coords) const {
  if (coords.size() != impl_->n) fail_invalid("CM element: expected " + std::to_string(impl_->n) + " coordinates");
  return from_coords(impl_->basis * to_rational(coords));
}

CMElement CMField::basis_element(std::size_t i) const { return from_coords(impl_->basis.column(i)); }

bool operator==(const CMField& a, const CMField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->min_poly == b.impl_->min_poly && a.impl_->conjugation == b.impl_->conjugation &&
         a.impl_->basis == b.impl_->basis;
}

namespace {

void require_same_field(const CMElement& a, const CMElement& b) {
  if (!(a.field() == b.field())) fail_invalid("CM elements belong to different fields");
}

}  // namespace

CMElement operator+(const CMElement& a, const CMElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return CMElement(a.field_, std::move(c));
}

CMElement operator-(const CMElement& a, const CMElement& b) { return a + (-b); }

CMElement CMElement::operator-() const { return scaled(-1); }

CMElement CMElement::scaled(const Rational& s) const {
  std::vector<Rational> c = coords_;
  for (auto& x : c) x *= s;
  return CMElement(field_, std::move(c));
}

CMElement operator*(const CMElement& a, const CMElement& b) {
  require_same_field(a, b);
  Polynomial prod = (as_poly(a.coords_) * as_poly(b.coords_)) % a.field_.min_poly();
  return CMElement(a.field_, to_coords(prod, a.field_.degree()));
}

CMElement operator/(const CMElement& a, const CMElement& b) {
  auto inv = b.inverse();
  if (!inv) fail_precondition("CM element: division by zero");
  return a * *inv;
}

bool operator==(const CMElement& a, const CMElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

bool operator<(const CMElement& a, const CMElement& b) { return a.coords_ < b.coords_; }

bool CMElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

CMElement CMElement::conj() const { return CMElement(field_, field_.conjugation() * coords_); }

CMElement CMElement::pow(unsigned k) const {
  CMElement result = field_.one();
  CMElement base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

RationalMatrix CMElement::multiplication_matrix() const {
  const std::size_t n = field_.degree();
  RationalMatrix m(n, n);
  CMElement col = *this;
  const CMElement theta = field_.generator();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coords_[i];
    col = col * theta;
  }
  return m;
}

std::optional<CMElement> CMElement::inverse() const {
  if (is_zero()) return std::nullopt;
  auto inv = k3lat::inverse(multiplication_matrix());
  if (!inv) return std::nullopt;
  std::vector<Rational> e(field_.degree(), Rational(0));
  e[0] = 1;
  return CMElement(field_, *inv * e);
}

std::vector<Rational> CMElement::integral_coords() const { return field_.impl_->basis_inverse * coords_; }

bool CMElement::is_integral() const {
  auto c = integral_coords();
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return k3lat::is_integral(x); });
}

Integer CMElement::denominator_over_integral_basis() const {
  Integer l = 1;
  for (const auto& x : integral_coords()) l = lcm(l, k3lat::denominator(x));
  return l;
}

Polynomial CMElement::char_poly() const { return characteristic_polynomial(multiplication_matrix()); }

Rational CMElement::trace() const {
  RationalMatrix m = multiplication_matrix();
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational CMElement::norm() const { return determinant(multiplication_matrix()); }

bool CMElement::is_real() const { return conj() == *this; }

bool CMElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

std::optional<Rational> CMElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

// A real element has a real-rooted characteristic polynomial, so
// Descartes' rule counts its positive roots exactly.
bool CMElement::is_totally_positive() const {
  if (!is_real()) return false;
  Polynomial p = char_poly();
  return p[0] != 0 && sign_changes(p) == static_cast<std::size_t>(p.degree());
}

bool CMElement::is_totally_nonnegative() const {
  if (!is_real()) return false;
  const Polynomial p = char_poly();
  const auto& c = p.coeffs();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  Polynomial rest(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
  return sign_changes(rest) == static_cast<std::size_t>(rest.degree());
}

std::string CMElement::to_string() const {
  std::vector<Rational> c = coords_;
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    bool neg = c[k] < 0;
    Rational mag = k3lat::abs(c[k]);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += k3lat::to_string(mag);
    if (k >= 1) out += (k == 0 || mag != 1) ? "*t" : "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace k3lat
