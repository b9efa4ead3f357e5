#include <gtest/gtest.h>

#include <random>

#include "k3lat/binary_forms.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/error.hpp"
#include "k3lat/genus.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

const Lattice A2{{2, 1}, {1, 2}};

std::vector<oracle::Vec> as_i64(const std::vector<LatticeVector>& vs) {
  std::vector<oracle::Vec> out;
  for (const auto& v : vs) {
    oracle::Vec w;
    for (const auto& x : v) w.push_back(static_cast<oracle::I64>(x));
    out.push_back(w);
  }
  return out;
}

void expect_compatible(const EmbeddingMatrix& e) {
  EXPECT_EQ(e.matrix().transpose() * e.target().gram() * e.matrix(), e.source().gram());
}

}  // namespace

TEST(Enumeration, VectorsOfNormExamples) {
  EXPECT_EQ(vectors_of_norm(A2, 2).size(), 6u);
  EXPECT_EQ(vectors_of_norm(Lattice{{1, 0}, {0, 1}}, 1).size(), 4u);
  EXPECT_TRUE(vectors_of_norm(A2, 1).empty());
  EXPECT_EQ(vectors_of_norm(A2, 0), (std::vector<LatticeVector>{{0, 0}}));
  EXPECT_THROW(vectors_of_norm(Lattice{{0, 1}, {1, 0}}, 2), PreconditionError);
  EXPECT_THROW(vectors_of_norm(A2, -2), PreconditionError);
}

TEST(Enumeration, VectorsOfNormMatchBox) {
  auto vs = vectors_of_norm(A2, 2);
  EXPECT_EQ(as_i64(vs), oracle::box_vectors({{2, 1}, {1, 2}}, 2, 2));
  EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
}

TEST(Enumeration, VectorsOfNormRandomRank4) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_positive_definite(4, 4, rng);
    for (oracle::I64 n : {1, 4, 9, 20}) {
      auto vs = vectors_of_norm(oracle::to_lattice(g), n);
      EXPECT_EQ(as_i64(vs), oracle::brute_vectors_of_norm(g, n));
      EXPECT_EQ(vs.size() % 2, 0u);
    }
  }
}

TEST(Enumeration, ShortVectorsRational) {
  RationalMatrix g{{Rational(1, 2), 0}, {0, Rational(1, 3)}};
  auto vs = short_vectors(g, Rational(1, 2));
  // x^2/2 + y^2/3 <= 1/2
  for (const auto& v : vs) EXPECT_LE(Rational(v[0] * v[0], 2) + Rational(v[1] * v[1], 3), Rational(1, 2));
  // (0,0), (+-1,0), (0,+-1)
  EXPECT_EQ(vs.size(), 5u);
}

TEST(Enumeration, EmbeddingsExamples) {
  EXPECT_EQ(embeddings(Lattice{{2}}, A2, false).size(), 6u);
  auto aut = embeddings(A2, A2, false);
  EXPECT_EQ(aut.size(), 12u);
  for (const auto& e : aut) expect_compatible(e);
  EXPECT_TRUE(embeddings(Lattice{{2}}, Lattice{{4}}, false).empty());
  EXPECT_THROW(embeddings(Lattice{{2}}, Lattice{{0, 1}, {1, 0}}, false), PreconditionError);
}

TEST(Enumeration, EmbeddingsMatchBrute) {
  oracle::Gram t{{2, 1, 0}, {1, 2, 0}, {0, 0, 2}};
  oracle::Gram s{{2, -1}, {-1, 2}};
  auto got = embeddings(oracle::to_lattice(s), oracle::to_lattice(t), false);
  auto want = oracle::brute_embeddings(s, t);
  ASSERT_EQ(got.size(), want.size());
  std::vector<std::vector<oracle::Vec>> cols;
  for (const auto& e : got) {
    std::vector<oracle::Vec> c;
    for (std::size_t j = 0; j < e.matrix().cols(); ++j) c.push_back(as_i64({e.matrix().column(j)}).front());
    cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  EXPECT_EQ(cols, want);
}

TEST(Enumeration, PrimitiveEmbeddings) {
  // <8> into <2>: v = 2 e is the only option, imprimitive
  EXPECT_EQ(embeddings(Lattice{{8}}, Lattice{{2}}, false).size(), 2u);
  EXPECT_TRUE(embeddings(Lattice{{8}}, Lattice{{2}}, true).empty());
  for (const auto& e : embeddings(Lattice{{2}}, A2, true)) EXPECT_TRUE(e.is_primitive());
}

TEST(Enumeration, AutomorphismGroupClosure) {
  auto aut = embeddings(A2, A2, false);
  std::set<IntMatrix> mats;
  for (const auto& e : aut) mats.insert(e.matrix());
  for (const auto& a : aut)
    for (const auto& b : aut) EXPECT_TRUE(mats.count(a.matrix() * b.matrix()));
}

TEST(Enumeration, DefiniteIsometry) {
  auto w = is_isometric_definite(form_to_lattice({2, 1, 3}), form_to_lattice({2, -1, 3}));
  ASSERT_TRUE(w);
  expect_compatible(*w);
  EXPECT_FALSE(is_isometric_definite(Lattice{{2, 0}, {0, 2}}, A2));
  EXPECT_TRUE(is_isometric_definite(A2, A2));
  EXPECT_TRUE(is_isometric_definite(twist(A2, -1), Lattice{{-2, 1}, {1, -2}}));
  EXPECT_THROW(is_isometric_definite(A2, twist(A2, -1)), PreconditionError);
}

TEST(Enumeration, IndefiniteSearch) {
  Lattice a = direct_sum(form_to_lattice({1, 1, 6}), Lattice{{-1}});
  Lattice b = direct_sum(form_to_lattice({2, 1, 3}), Lattice{{-1}});

  auto self = indefinite_isometry_search(a, twist(a, 1), 1);
  ASSERT_EQ(self.outcome, SearchOutcome::isometric);
  EXPECT_EQ(self.witness->matrix(), IntMatrix::identity(3));

  auto mismatch = indefinite_isometry_search(a, direct_sum(form_to_lattice({1, 1, 8}), Lattice{{-1}}), 5);
  EXPECT_EQ(mismatch.outcome, SearchOutcome::not_isometric);

  // no witness with entries <= 10 in either direction; 14 suffices for b -> a
  EXPECT_EQ(indefinite_isometry_search(b, a, 10).outcome, SearchOutcome::inconclusive);
  EXPECT_EQ(indefinite_isometry_search(a, b, 10).outcome, SearchOutcome::inconclusive);
  auto found = indefinite_isometry_search(b, a, 14);
  ASSERT_EQ(found.outcome, SearchOutcome::isometric);
  expect_compatible(*found.witness);
  EXPECT_TRUE(same_genus(a, b));
}

TEST(Enumeration, OrbitInvariantExamples) {
  auto inv = orbit_invariant(Lattice{{2, 0}, {0, -2}}, {1, 0});
  EXPECT_EQ(inv.norm, 2);
  // complement is [-2], stored negated
  EXPECT_EQ(inv.complement_gram_unoriented, (IntMatrix{{2}}));
  EXPECT_EQ(inv.complement_discriminant_group, (std::vector<Integer>{2}));

  Lattice n = twist(direct_sum(form_to_lattice({1, 1, 6}), Lattice{{-1}}), -4);
  auto i0 = orbit_invariant(n, {0, 0, 1});
  EXPECT_EQ(i0.norm, 4);
  EXPECT_EQ(i0.complement_gram_unoriented, (IntMatrix{{8, 4}, {4, 48}}));

  EXPECT_THROW(orbit_invariant(n, {0, 0, 2}), PreconditionError);
  EXPECT_THROW(orbit_invariant(n, {1, 0, 0}), PreconditionError);
  EXPECT_THROW(orbit_invariant(A2, {1, 0}), PreconditionError);
}

TEST(Enumeration, OrbitInvariantUnderIsometries) {
  // N = U + <-2>: isometries from the automorphisms of the definite part
  // are not available, so use sign changes and the swap of U
  Lattice n{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}};
  std::vector<IntMatrix> isos = {IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
                                 IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  for (const LatticeVector& v : {LatticeVector{1, 1, 0}, LatticeVector{1, 3, 1}, LatticeVector{2, 5, 1}}) {
    auto base = orbit_invariant(n, v);
    for (const auto& g : isos) {
      ASSERT_EQ(g.transpose() * n.gram() * g, n.gram());
      auto other = orbit_invariant(n, g * v);
      EXPECT_EQ(other.complement_gram_unoriented, base.complement_gram_unoriented);
      if (determinant(g) == 1) EXPECT_EQ(other, base);
    }
  }
}
