#pragma once

#include <optional>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

// a X^2 + b XY + c Y^2.
struct BinaryForm {
  Integer a;
  Integer b;
  Integer c;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend bool operator<(const BinaryForm& f, const BinaryForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
  }
};

Integer discriminant(const BinaryForm& f);
Integer content(const BinaryForm& f);
bool is_positive_definite(const BinaryForm& f);

// |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
bool is_reduced(const BinaryForm& f);

// The form (f . M)(x, y) = f(M (x, y)^T), i.e. Gram matrix M^T G M.
BinaryForm act(const BinaryForm& f, const IntMatrix& m);

struct Reduction {
  BinaryForm form;
  IntMatrix transform;  // determinant 1, act(input, transform) == form
};

// Unique reduced form in the SL2(Z)-class of a positive definite form.
Reduction reduce(const BinaryForm& f);

// Some M in SL2(Z) with act(f, M) == g, if the forms are properly equivalent.
std::optional<IntMatrix> is_equivalent(const BinaryForm& f, const BinaryForm& g);

struct FormClassGroup {
  Integer discriminant;
  std::vector<BinaryForm> elements;  // reduced, primitive; principal form first

  std::size_t order() const { return elements.size(); }
  const BinaryForm& identity() const { return elements.front(); }
};

bool is_valid_negative_discriminant(const Integer& d);

BinaryForm principal_form(const Integer& d);
BinaryForm inverse(const BinaryForm& f);

// All primitive reduced forms of discriminant d < 0, d = 0 or 1 mod 4,
// sorted by increasing a and then decreasing b.
FormClassGroup class_group(const Integer& d);

// Dirichlet composition of primitive forms of the same negative
// discriminant, returned reduced.
BinaryForm compose(const BinaryForm& f, const BinaryForm& g);

// Whether every class of Cl(-p) is a square, for a prime p = 3 mod 4.
bool verify_principal_genus(const Integer& p);

// Gram matrix [[2a, b], [b, 2c]].
Lattice form_to_lattice(const BinaryForm& f);

}  // namespace k3lat
