#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

// An isometric embedding source -> target. Column j holds the image of the
// j-th source basis vector in target coordinates, and
//   matrix^T * target.gram * matrix == source.gram
// holds exactly for every constructed value.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix(IntMatrix matrix, Lattice source, Lattice target);

  const IntMatrix& matrix() const { return matrix_; }
  const Lattice& source() const { return source_; }
  const Lattice& target() const { return target_; }

  LatticeVector image(const LatticeVector& v) const { return matrix_ * v; }

  // Whether the image is a saturated (primitive) sublattice of the target.
  bool is_primitive() const;

  friend bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b) {
    return a.matrix_ == b.matrix_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  IntMatrix matrix_;
  Lattice source_;
  Lattice target_;
};

// Every x with x^T gram x <= bound, for a positive definite rational Gram
// matrix, by Fincke-Pohst enumeration with exact rational Cholesky bounds.
// Output is sorted lexicographically.
std::vector<LatticeVector> short_vectors(const RationalMatrix& gram, const Rational& bound);

// Every v with norm(L, v) == n, sorted lexicographically.
std::vector<LatticeVector> vectors_of_norm(const Lattice& lattice, const Integer& n);

// All isometric embeddings N -> L of positive definite lattices, sorted by
// their columns; with primitive_only, only those with saturated image.
std::vector<EmbeddingMatrix> embeddings(const Lattice& source, const Lattice& target, bool primitive_only);

// An isometry L1 -> L2 between definite lattices of the same sign, if any.
std::optional<EmbeddingMatrix> is_isometric_definite(const Lattice& a, const Lattice& b);

enum class SearchOutcome {
  isometric,      // witness present
  not_isometric,  // proven: rank, signature or determinant differ
  inconclusive,   // no witness with entries bounded by the height bound
};

struct IsometrySearch {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::optional<EmbeddingMatrix> witness;
  std::string detail;
};

// Bounded search for an isometry between (possibly indefinite) lattices:
// integer matrices M with |entries| <= height_bound and M^T G_b M = G_a.
// Candidates are tried in order of increasing height.
IsometrySearch indefinite_isometry_search(const Lattice& a, const Lattice& b, const Integer& height_bound);

// Invariant of a positive vector v in a lattice N of signature (1, m),
// m <= 2, read off the definite complement v^perp.
//
// complement_gram is the reduced Gram matrix of -(v^perp) taken with the
// orientation in which (v, b_1, ..., b_m) is positively oriented in N. It is
// constant on orbits of orientation-preserving isometries of N, and replacing
// v by an image under an orientation-reversing isometry replaces it by its
// mirror image. complement_gram_unoriented forgets the orientation and is
// constant on full O(N)-orbits.
struct OrbitInvariant {
  Integer norm;
  std::vector<Integer> discriminant_group;
  std::vector<Integer> complement_discriminant_group;
  IntMatrix complement_gram;
  IntMatrix complement_gram_unoriented;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

OrbitInvariant orbit_invariant(const Lattice& lattice, const LatticeVector& v);

}  // namespace k3lat
