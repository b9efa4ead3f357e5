#include <gtest/gtest.h>

#include <random>

#include "k3lat/binary_forms.hpp"
#include "k3lat/cm_twistor.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/k3_census.hpp"
#include "k3lat/lattice.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<oracle::I64>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_sl2(std::mt19937_64& rng) {
  auto u = oracle::random_unimodular(2, rng, 8, 2);
  IntMatrix m = to_matrix(u);
  if (determinant(m) < 0)
    for (std::size_t i = 0; i < 2; ++i) m(i, 0) = -m(i, 0);
  return m;
}

oracle::Gram random_nondegenerate(std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<oracle::I64> e(-5, 5);
  for (;;) {
    oracle::Gram g(rank, oracle::Vec(rank));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i; j < rank; ++j) g[i][j] = g[j][i] = e(rng);
    if (oracle::det(g) != 0) return g;
  }
}

Integer product(const std::vector<Integer>& xs) {
  Integer r = 1;
  for (const auto& x : xs) r *= x;
  return r;
}

}  // namespace

TEST(Properties, ReductionIsIdempotentAndClassInvariant) {
  std::mt19937_64 rng(1);
  for (oracle::I64 d : {-3, -4, -23, -47, -71, -84, -199, -420}) {
    for (const auto& f : class_group(d).elements) {
      EXPECT_EQ(reduce(f).form, f);
      for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_sl2(rng);
        BinaryForm g = act(f, m);
        auto r = reduce(g);
        EXPECT_EQ(r.form, f);
        EXPECT_EQ(determinant(r.transform), 1);
        EXPECT_EQ(act(g, r.transform), r.form);
        EXPECT_EQ(reduce(r.form).form, r.form);
      }
    }
  }
}

TEST(Properties, ClassGroupAxioms) {
  for (oracle::I64 d = -3; d > -500; --d) {
    if (!is_valid_negative_discriminant(d)) continue;
    auto g = class_group(d);
    const auto& e = g.identity();
    EXPECT_EQ(e, principal_form(d));
    for (const auto& f : g.elements) {
      EXPECT_EQ(compose(f, e), f);
      EXPECT_EQ(compose(f, inverse(f)), e);
    }
    // associativity is cubic in h; sample the first few elements when h is large
    std::size_t n = std::min<std::size_t>(g.order(), 8);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = g.elements[i];
        const auto& b = g.elements[j];
        EXPECT_EQ(compose(a, b), compose(b, a));
        for (std::size_t k = 0; k < n; ++k) {
          const auto& c = g.elements[k];
          EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c))) << "D=" << d;
        }
      }
  }
}

TEST(Properties, LatticeInvariantsUnderBaseChange) {
  std::mt19937_64 rng(2);
  for (std::size_t rank : {2u, 3u, 4u}) {
    for (int t = 0; t < 25; ++t) {
      auto g = random_nondegenerate(rank, rng);
      Lattice l = oracle::to_lattice(g);
      auto sig = signature(l);
      auto det = determinant(l);
      auto dg = discriminant_group(l);
      for (int s = 0; s < 4; ++s) {
        auto u = oracle::random_unimodular(rank, rng);
        Lattice m = oracle::to_lattice(oracle::transform(g, u));
        EXPECT_EQ(signature(m), sig);
        EXPECT_EQ(determinant(m), det);
        EXPECT_EQ(discriminant_group(m), dg);
        EXPECT_TRUE(same_genus(l, m));
      }
      EXPECT_EQ(product(dg), abs(det));
      EXPECT_EQ(sig.positive + sig.negative, rank);
      for (int a : {-3, 2, 5}) EXPECT_EQ(determinant(twist(l, a)), k3lat::pow(Integer(a), rank) * det);
    }
  }
}

TEST(Properties, ComplementIsOrthogonal) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<oracle::I64> e(-4, 4);
  for (int t = 0; t < 100; ++t) {
    auto g = random_nondegenerate(3, rng);
    Lattice l = oracle::to_lattice(g);
    LatticeVector v{e(rng), e(rng), e(rng)};
    if (content(v) == 0) continue;
    auto c = orthogonal_complement(l, v);
    ASSERT_EQ(c.basis.cols(), 2u);
    for (std::size_t j = 0; j < c.basis.cols(); ++j) EXPECT_EQ(l.pairing(c.basis.column(j), v), 0);
    EXPECT_EQ(c.lattice, pullback(l, c.basis));
    // the basis spans a saturated sublattice
    EXPECT_EQ(smith_invariants(c.basis), (std::vector<Integer>{1, 1}));
  }
}

TEST(Properties, NormsOfEvenLatticesAreEven) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_positive_definite(3, 3, rng);
    for (std::size_t i = 0; i < 3; ++i) g[i][i] = 2 * std::abs(g[i][i]) + 6;
    if (oracle::det(g) <= 0) continue;
    Lattice l = oracle::to_lattice(g);
    for (oracle::I64 n = 1; n <= 12; ++n) {
      auto vs = vectors_of_norm(l, n);
      if (n % 2) EXPECT_TRUE(vs.empty());
      for (const auto& v : vs) EXPECT_EQ(norm(l, v), n);
    }
  }
}

TEST(Properties, SameGenusIsAnEquivalenceRelation) {
  std::vector<Lattice> corpus;
  for (oracle::I64 d : {-23, -56, -84, -20}) {
    for (const auto& f : class_group(d).elements) corpus.push_back(form_to_lattice(f));
  }
  corpus.push_back(Lattice{{2, 1, 0}, {1, 12, 0}, {0, 0, -1}});
  corpus.push_back(Lattice{{4, 1, 0}, {1, 6, 0}, {0, 0, -1}});
  corpus.push_back(Lattice{{0, 1, 0}, {1, 0, 0}, {0, 0, -46}});
  for (const auto& a : corpus) {
    EXPECT_TRUE(same_genus(a, a));
    for (const auto& b : corpus) {
      EXPECT_EQ(same_genus(a, b), same_genus(b, a));
      if (!same_genus(a, b)) continue;
      for (const auto& c : corpus)
        if (same_genus(b, c)) EXPECT_TRUE(same_genus(a, c));
    }
  }
}

TEST(Properties, FourierMukaiDoublesWithEachNewPrime) {
  auto primes = oracle::primes_below(60);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(1, primes.size() - 1);
  for (int t = 0; t < 50; ++t) {
    Integer half = 1;
    for (int k = 0; k < 3; ++k) half *= primes[pick(rng)];
    Integer d = 2 * half;
    oracle::I64 q = 0;
    for (auto p : primes)
      if (p > 2 && half % p != 0) { q = p; break; }
    ASSERT_NE(q, 0);
    if (tau(d) == 0) continue;
    EXPECT_EQ(fm_partner_count(d * q), 2 * fm_partner_count(d));
  }
}

TEST(Properties, NormEquationHoldsForEveryPeriodEmbedding) {
  auto k = CMField::imaginary_quadratic(-3);
  PeriodVector pv{Lattice{{2, -1}, {-1, 2}}, {k.one(), k.one() - k.generator()}};
  pv = normalize_period(pv);
  auto ssb = pairing_sigma_sigmabar(pv);
  for (int d : {2, 4, 6}) {
    auto r = enumerate_period_embeddings(pv, d);
    for (const auto& e : r.embeddings) {
      const auto& s = e.solution;
      EXPECT_TRUE(verify_norm_equation(s.lambda, s.lambda_prime, s.nu, d, ssb));
      // r * lambda integral for the scaling denominator r
      EXPECT_TRUE(s.lambda.scaled(Rational(r.scaling)).is_integral());
      EXPECT_TRUE(s.lambda_prime.scaled(Rational(r.scaling)).is_integral());
    }
  }
}
