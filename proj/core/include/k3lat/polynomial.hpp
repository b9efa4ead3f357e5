#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
  static Polynomial from_integers(const std::vector<Integer>& coeffs);
  static Polynomial monomial(std::size_t k, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^k, zero past the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& s) const;

  bool has_integer_coefficients() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::vector<Integer> integer_coefficients() const;  // throws unless integral

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divide(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);

// Number of distinct real roots (Sturm).
std::size_t count_real_roots(const Polynomial& p);
// Sign changes in the coefficient sequence, zeros skipped.
std::size_t sign_changes(const Polynomial& p);

// Irreducibility over Q for monic integer polynomials of degree <= 4.
bool is_irreducible(const Polynomial& p);

// det(x I - m) by Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const RationalMatrix& m);

// m-th cyclotomic polynomial.
Polynomial cyclotomic_polynomial(unsigned m);

std::string to_string(const Polynomial& p);

}  // namespace k3lat
