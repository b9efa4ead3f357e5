#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "k3lat/cm_field.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/integer.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// sigma = sum_i mu[i] * gamma_i in T (x) K, gamma_i the basis of T.
struct PeriodVector {
  Lattice lattice{{1}};
  std::vector<CMElement> mu;
};

// Rescales mu so that (gamma_1 . sigma) = 1. Throws if that pairing is zero.
PeriodVector normalize_period(const PeriodVector& pv);

// Checks isotropy, total positivity of (sigma . sigma-bar), generality
// (the mu_i are Q-linearly independent) and the normalization sigma_1 = 1.
void validate_period(const PeriodVector& pv);

// (sigma . sigma-bar) = sum mu_i conj(mu_j) (gamma_i . gamma_j).
CMElement pairing_sigma_sigmabar(const PeriodVector& pv);

// phi(sigma) = lambda sigma + lambda' sigma-bar + nu e.
struct LambdaSolution {
  CMElement lambda;
  CMElement lambda_prime;
  CMElement nu;
};

// phi maps T into T + Z(d) (or T(n^2) into it, for an overlattice of
// index n). Columns of phi are images of the gamma_i, the last row is the
// e-coordinate. Returns nullopt when phi(sigma) is not in the span.
std::optional<LambdaSolution> solve_lambda(const PeriodVector& pv, const EmbeddingMatrix& phi);

// lambda lambda-bar + lambda' lambda'-bar + nu nu-bar d / ssb == index^2.
bool verify_norm_equation(const CMElement& lambda, const CMElement& lambda_prime, const CMElement& nu,
                          const Integer& d, const CMElement& ssb, const Integer& index = 1);

// All x in O_K with |g(x)| <= bound under every embedding g.
std::vector<CMElement> enumerate_bounded_integers(const CMField& field, const Integer& bound);

// Least m with x^m = 1, if x is a root of unity.
std::optional<unsigned> is_root_of_unity(const CMElement& x);

// Roots of unity of O_K, sorted by order then coordinates.
std::vector<CMElement> roots_of_unity(const CMField& field);

// Smallest N with N lambda, N lambda' integral for every admissible phi.
Integer scaling_denominator(const PeriodVector& pv);

struct PeriodEmbedding {
  EmbeddingMatrix phi;
  LambdaSolution solution;
};

struct PeriodEmbeddingSearch {
  std::vector<PeriodEmbedding> embeddings;  // sorted by matrix
  Integer scaling;                          // N
  std::size_t candidates = 0;               // (lambda, lambda') pairs passing the norm filter
  std::size_t unlifted = 0;                 // candidates without an integral phi
};

// Every phi: T(index^2) -> T + Z(d) with phi(sigma) in span(sigma, sigma-bar, e).
PeriodEmbeddingSearch enumerate_period_embeddings(const PeriodVector& pv, const Integer& d,
                                                  const Integer& index = 1);

unsigned long euler_phi(unsigned long m);
// max { m : phi(m) <= degree }.
unsigned long max_cyclotomic_order(unsigned degree);
// 2 * roots_of_unity if given, else 2 * max_cyclotomic_order(degree); 1 <= degree <= 21.
unsigned long twistor_fiber_bound(unsigned degree, std::optional<unsigned long> roots_of_unity = std::nullopt);

}  // namespace k3lat
