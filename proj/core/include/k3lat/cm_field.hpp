#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/polynomial.hpp"

namespace k3lat {

class CMElement;

// K = Q(theta), theta a root of a monic irreducible integer polynomial of
// degree 2 or 4 with no real roots, together with the involution acting as
// complex conjugation under every embedding. Elements are stored in the
// power basis 1, theta, ..., theta^(n-1).
class CMField {
 public:
  // conjugation: column j holds the power-basis coordinates of conj(theta^j).
  // integral_basis: columns are power-basis coordinates of a Z-basis of O_K;
  // defaults to the power basis (the order Z[theta]).
  static CMField from_data(const Polynomial& min_poly, const RationalMatrix& conjugation,
                           const std::optional<RationalMatrix>& integral_basis = std::nullopt);
  // Q(sqrt(m)) for squarefree m < 0, generated by the standard integral generator.
  static CMField imaginary_quadratic(const Integer& m);
  // Q(zeta_m) for m with phi(m) in {2, 4}.
  static CMField cyclotomic(unsigned m);

  std::size_t degree() const;
  const Polynomial& min_poly() const;
  const RationalMatrix& conjugation() const;
  const RationalMatrix& integral_basis() const;
  std::string description() const;

  CMElement zero() const;
  CMElement one() const;
  CMElement generator() const;
  CMElement from_rational(const Rational& q) const;
  CMElement from_coords(std::vector<Rational> power_coords) const;
  CMElement from_integral_coords(const std::vector<Integer>& coords) const;
  // i-th integral basis element.
  CMElement basis_element(std::size_t i) const;

  friend bool operator==(const CMField& a, const CMField& b);

  struct Impl;

 private:
  explicit CMField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class CMElement;
};

class CMElement {
 public:
  const CMField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend CMElement operator+(const CMElement& a, const CMElement& b);
  friend CMElement operator-(const CMElement& a, const CMElement& b);
  friend CMElement operator*(const CMElement& a, const CMElement& b);
  friend CMElement operator/(const CMElement& a, const CMElement& b);
  CMElement operator-() const;
  CMElement scaled(const Rational& s) const;
  friend bool operator==(const CMElement& a, const CMElement& b);
  friend bool operator<(const CMElement& a, const CMElement& b);  // by coordinates

  bool is_zero() const;
  CMElement conj() const;
  CMElement pow(unsigned k) const;
  std::optional<CMElement> inverse() const;

  // Coordinates over the integral basis.
  std::vector<Rational> integral_coords() const;
  bool is_integral() const;
  // Least common denominator of the integral-basis coordinates.
  Integer denominator_over_integral_basis() const;

  // Multiplication-by-this matrix on power-basis coordinates.
  RationalMatrix multiplication_matrix() const;
  Polynomial char_poly() const;
  Rational trace() const;
  Rational norm() const;

  bool is_real() const;  // fixed by conjugation
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  // For real elements: every conjugate > 0 (resp. >= 0).
  bool is_totally_positive() const;
  bool is_totally_nonnegative() const;

  std::string to_string() const;

 private:
  CMElement(CMField field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {}
  CMField field_;
  std::vector<Rational> coords_;
  friend class CMField;
};

}  // namespace k3lat
