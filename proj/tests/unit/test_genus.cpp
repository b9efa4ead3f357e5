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

std::size_t total_dim(const GenusSymbol& s) {
  std::size_t n = 0;
  for (const auto& b : s.blocks) n += b.dim;
  return n;
}

int scale_exponent_sum(const GenusSymbol& s) {
  int e = 0;
  for (const auto& b : s.blocks) e += b.scale * static_cast<int>(b.dim);
  return e;
}

}  // namespace

TEST(Genus, SymbolExamples) {
  auto s3 = padic_symbol(A2, 3);
  ASSERT_EQ(s3.blocks.size(), 2u);
  EXPECT_EQ(s3.blocks[0].scale, 0);
  EXPECT_EQ(s3.blocks[0].dim, 1u);
  EXPECT_EQ(s3.blocks[1].scale, 1);
  EXPECT_EQ(s3.blocks[1].dim, 1u);

  auto s5 = padic_symbol(Lattice{{1, 0}, {0, 1}}, 5);
  ASSERT_EQ(s5.blocks.size(), 1u);
  EXPECT_EQ(s5.blocks[0].dim, 2u);
  EXPECT_EQ(s5.blocks[0].scale, 0);

  auto s2 = padic_symbol(Lattice{{2, 0}, {0, -2}}, 2);
  ASSERT_EQ(s2.blocks.size(), 1u);
  EXPECT_EQ(s2.blocks[0].scale, 1);
  EXPECT_EQ(s2.blocks[0].dim, 2u);
  EXPECT_EQ(s2.blocks[0].type, BlockType::odd);

  EXPECT_THROW(padic_symbol(A2, 4), PreconditionError);
  EXPECT_THROW(padic_symbol(Lattice{{1, 1}, {1, 1}}, 2), PreconditionError);
}

TEST(Genus, TwoAdicTypes) {
  auto even = padic_symbol(A2, 2);
  ASSERT_EQ(even.blocks.size(), 1u);
  EXPECT_EQ(even.blocks[0].type, BlockType::even);
  EXPECT_FALSE(even.blocks[0].oddity);

  auto odd = padic_symbol(Lattice{{1, 0}, {0, 3}}, 2);
  ASSERT_EQ(odd.blocks.size(), 1u);
  EXPECT_EQ(odd.blocks[0].type, BlockType::odd);
  EXPECT_EQ(odd.blocks[0].oddity, 4);
}

TEST(Genus, BlockDimensionsAndScales) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_positive_definite(3, 6, rng);
    Lattice l = oracle::to_lattice(g);
    for (const auto& p : genus_primes(l)) {
      auto s = padic_symbol(l, p);
      EXPECT_EQ(total_dim(s), 3u);
      EXPECT_EQ(scale_exponent_sum(s), valuation(determinant(l), p));
    }
  }
}

TEST(Genus, SameGenusExamples) {
  EXPECT_TRUE(same_genus(A2, A2));
  EXPECT_FALSE(same_genus(Lattice{{2, 0}, {0, 2}}, A2));
  EXPECT_TRUE(same_genus(direct_sum(form_to_lattice({1, 1, 6}), Lattice{{-1}}),
                         direct_sum(form_to_lattice({2, 1, 3}), Lattice{{-1}})));
  // same determinant, different genus: x^2 + 3y^2 vs the even form [[2,1],[1,2]]
  EXPECT_FALSE(same_genus(Lattice{{1, 0}, {0, 3}}, A2));
  // basis order is irrelevant; sign is not
  EXPECT_TRUE(same_genus(Lattice{{1, 0}, {0, -1}}, Lattice{{-1, 0}, {0, 1}}));
  EXPECT_FALSE(same_genus(Lattice{{1}}, Lattice{{-1}}));
}

TEST(Genus, ClassGroupFormsShareOneGenus) {
  for (oracle::I64 p : {23, 31, 47, 59, 71, 79, 103}) {
    ASSERT_TRUE(verify_principal_genus(p));
    auto g = class_group(-p);
    for (const auto& f : g.elements)
      for (const auto& h : g.elements) EXPECT_TRUE(same_genus(form_to_lattice(f), form_to_lattice(h))) << p;
  }
}

TEST(Genus, DistinctGeneraForCompositeDiscriminant) {
  // D = -20: (1,0,5) and (2,2,3) are in different genera
  EXPECT_FALSE(same_genus(form_to_lattice({1, 0, 5}), form_to_lattice({2, 2, 3})));
  // D = -56: principal genus {(1,0,14), (2,0,7)}, the other {(3,2,5), (3,-2,5)}
  EXPECT_TRUE(same_genus(form_to_lattice({1, 0, 14}), form_to_lattice({2, 0, 7})));
  EXPECT_FALSE(same_genus(form_to_lattice({1, 0, 14}), form_to_lattice({3, 2, 5})));
  EXPECT_TRUE(same_genus(form_to_lattice({3, 2, 5}), form_to_lattice({3, -2, 5})));
}

TEST(Genus, FingerprintAgreesWithSameGenus) {
  std::vector<oracle::Gram> corpus = {
      {{2, 1}, {1, 2}},          {{2, 0}, {0, 6}},         {{4, 2}, {2, 4}},   {{2, 0}, {0, 2}},
      {{2, 1}, {1, 12}},         {{4, 1}, {1, 6}},         {{2, 0}, {0, 10}},  {{4, 2}, {2, 6}},
      {{2, 0}, {0, 28}},         {{4, 0}, {0, 14}},        {{6, 2}, {2, 10}},  {{2, 1, 0}, {1, 2, 0}, {0, 0, 2}},
      {{2, 0, 0}, {0, 6, 0}, {0, 0, 2}}, {{2, 1, 0}, {1, 12, 0}, {0, 0, -2}}, {{4, 1, 0}, {1, 6, 0}, {0, 0, -2}}};
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (corpus[i].size() != corpus[j].size()) continue;
      bool same = same_genus(oracle::to_lattice(corpus[i]), oracle::to_lattice(corpus[j]));
      if (same) {
        EXPECT_EQ(oracle::det(corpus[i]), oracle::det(corpus[j]));
        EXPECT_EQ(oracle::discriminant_fingerprint(corpus[i]), oracle::discriminant_fingerprint(corpus[j]))
            << i << " " << j;
      }
    }
}

TEST(Genus, IsometricImpliesSameGenus) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_positive_definite(3, 5, rng);
    auto h = oracle::transform(g, oracle::random_unimodular(3, rng));
    EXPECT_TRUE(same_genus(oracle::to_lattice(g), oracle::to_lattice(h)));
  }
}

TEST(Genus, JordanDecompositionDims) {
  auto j = jordan_decomposition(Lattice{{2, 0, 0}, {0, 4, 0}, {0, 0, 6}}, 2);
  std::size_t n = 0;
  for (const auto& b : j.blocks) n += b.dim;
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(genus_primes(Lattice{{2, 0}, {0, 15}}), (std::vector<Integer>{2, 3, 5}));
}
