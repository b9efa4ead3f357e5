#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/binary_forms.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/integer.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Family of h(-p) primitive classes of square 4*d0 in one lattice N of
// signature (1, 2) without (-2)-classes, whose complements realize every
// class of Cl(-p).
//
// Index j corresponds to forms[j]. ternaries[j] = form_to_lattice(forms[j])
// + <-d0>. isometry_witnesses[j] maps ternaries[j] onto ternaries[0]
// (determinant +1); classes[j] is the image of the <-d0> generator, read
// inside ns_lattice = ternaries[0](-4).
//
// Witnesses come from the bounded matrix search (entries <= height_bound)
// and, failing that, from scanning vectors v of norm -d0 in ternaries[0]
// with last coordinate |z| <= alpha_bound whose complement is forms[j].
// witness_methods[j] is "identity", "bounded_search" or "complement_search".
// Indices left without a witness have no class and no invariant
// ("genus-only" entries).
struct UnboundedFamilyCertificate {
  Integer p;
  Integer d0;
  Integer degree;
  std::size_t h = 0;
  Integer height_bound;
  Integer alpha_bound;
  std::vector<BinaryForm> forms;
  std::vector<Lattice> ternaries;
  std::vector<std::vector<bool>> genus_checks;
  std::vector<std::optional<EmbeddingMatrix>> isometry_witnesses;
  std::vector<std::string> witness_methods;
  Lattice ns_lattice{{1}};
  std::vector<std::optional<LatticeVector>> classes;
  std::vector<std::optional<OrbitInvariant>> complement_invariants;
  bool minus_two_free = false;

  bool genus_only() const;
  std::vector<std::size_t> missing_witnesses() const;
  // Number of pairwise distinct oriented / unoriented invariants.
  std::size_t distinct_oriented_invariants() const;
  std::size_t distinct_unoriented_invariants() const;
};

UnboundedFamilyCertificate build_unbounded_family(const Integer& p, const Integer& d0,
                                                  const Integer& height_bound = 10,
                                                  const Integer& alpha_bound = 200);

// Re-derives every claim of a certificate from its own data (class group,
// ternaries, genus checks, witnesses, classes, invariants, (-2)-freeness).
// Throws PreconditionError naming the first failed check.
void verify_certificate(const UnboundedFamilyCertificate& cert);

enum class MinusTwoMethod {
  congruence,        // every norm is divisible by 4
  positive_definite, // no negative norms at all
  negative_definite, // exhaustive finite enumeration
  box_search,        // bounded search in an indefinite lattice
};

struct MinusTwoResult {
  bool found = false;
  bool conclusive = false;
  MinusTwoMethod method = MinusTwoMethod::box_search;
  std::optional<LatticeVector> witness;
};

// Looks for v with norm(N, v) = -2. Witnesses are sign-normalized so the
// first nonzero coordinate is positive.
MinusTwoResult find_minus_two_class(const Lattice& lattice, const Integer& search_bound);
bool has_minus_two_class(const Lattice& lattice, const Integer& search_bound);

struct TwistorCount {
  std::size_t count = 0;
  std::vector<LatticeVector> representatives;  // first nonzero coordinate positive
};

// Antipodal pairs of vectors of norm d in a positive definite lattice of
// rank <= 3.
TwistorCount count_integral_twistor_classes(const Lattice& positive, const Integer& d);

// Number of distinct primes dividing d / 2, for even d > 0.
int tau(const Integer& d);

// 2^(tau(d) - 1), with the value 1 at tau(d) = 0.
Integer fm_partner_count(const Integer& d);

std::string to_string(MinusTwoMethod method);

}  // namespace k3lat
