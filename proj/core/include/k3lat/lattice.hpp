#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

// Coordinates of a lattice element in the basis of its host lattice.
using LatticeVector = IntVector;

// An integral lattice given by its Gram matrix. Odd lattices are allowed;
// degenerate Gram matrices can be represented but most operations reject
// them.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);
  Lattice(std::initializer_list<std::initializer_list<Integer>> gram) : Lattice(IntMatrix(gram)) {}

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  // Bilinear pairing (a.b) of two coordinate vectors.
  Integer pairing(const LatticeVector& a, const LatticeVector& b) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Integer norm(const Lattice& lattice, const LatticeVector& v);

// Exact signature by symmetric rational elimination (Sylvester's law of
// inertia). Throws PreconditionError on degenerate input.
Signature signature(const Lattice& lattice);

Integer determinant(const Lattice& lattice);

bool is_nondegenerate(const Lattice& lattice);
bool is_positive_definite(const Lattice& lattice);
bool is_negative_definite(const Lattice& lattice);

// Invariant factors > 1 of the discriminant group L^vee / L.
std::vector<Integer> discriminant_group(const Lattice& lattice);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Gram matrix scaled by a (the lattice L(a)).
Lattice twist(const Lattice& lattice, const Integer& a);

// U^T G U: the lattice spanned by the columns of U (in coordinates of L).
Lattice pullback(const Lattice& lattice, const IntMatrix& basis);

struct Complement {
  Lattice lattice;  // Gram matrix of the complement in the basis below
  IntMatrix basis;  // columns: complement basis in coordinates of the host
};

// The sublattice {x : (x.v) = 0}, with an HNF-normalized primitive basis.
Complement orthogonal_complement(const Lattice& lattice, const LatticeVector& v);

bool is_primitive(const Lattice& lattice, const LatticeVector& v);

}  // namespace k3lat
