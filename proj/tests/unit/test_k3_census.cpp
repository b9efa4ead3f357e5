#include <gtest/gtest.h>

#include <random>

#include "k3lat/binary_forms.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/error.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/k3_census.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

void expect_certificate_invariants(const UnboundedFamilyCertificate& c) {
  EXPECT_EQ(c.degree, 4 * c.d0);
  EXPECT_EQ(c.forms.size(), c.h);
  EXPECT_EQ(c.h, oracle::scan_reduced_forms(-static_cast<oracle::I64>(c.p)).size());
  for (const auto& row : c.genus_checks)
    for (bool b : row) EXPECT_TRUE(b);
  EXPECT_TRUE(c.minus_two_free);
  EXPECT_TRUE(c.missing_witnesses().empty());
  for (std::size_t j = 0; j < c.h; ++j) {
    ASSERT_TRUE(c.isometry_witnesses[j]);
    const auto& w = *c.isometry_witnesses[j];
    EXPECT_EQ(w.matrix().transpose() * w.target().gram() * w.matrix(), w.source().gram());
    EXPECT_EQ(w.source(), c.ternaries[j]);
    EXPECT_EQ(w.target(), c.ternaries[0]);
    ASSERT_TRUE(c.classes[j]);
    EXPECT_EQ(norm(c.ns_lattice, *c.classes[j]), c.degree);
    EXPECT_TRUE(is_primitive(c.ns_lattice, *c.classes[j]));
  }
  EXPECT_EQ(c.distinct_oriented_invariants(), c.h);
  EXPECT_NO_THROW(verify_certificate(c));
}

}  // namespace

TEST(K3Census, Family23) {
  auto c = build_unbounded_family(23, 1);
  EXPECT_EQ(c.h, 3u);
  EXPECT_EQ(c.degree, 4);
  EXPECT_EQ(c.ns_lattice, twist(direct_sum(form_to_lattice({1, 1, 6}), Lattice{{-1}}), -4));
  expect_certificate_invariants(c);
  EXPECT_EQ(c.witness_methods[0], "identity");
  // the two non-principal forms are mirror images
  EXPECT_EQ(c.distinct_unoriented_invariants(), 2u);
  // complement of the principal class is (1,1,6) scaled by 4
  EXPECT_EQ(c.complement_invariants[0]->complement_gram_unoriented, (IntMatrix{{8, 4}, {4, 48}}));
}

TEST(K3Census, FamilyWithTrivialClassGroup) {
  auto c = build_unbounded_family(7, 1);
  EXPECT_EQ(c.h, 1u);
  expect_certificate_invariants(c);
}

TEST(K3Census, FamiliesForSeveralPrimes) {
  for (int p : {31, 59}) {
    auto c = build_unbounded_family(p, 1);
    expect_certificate_invariants(c);
    EXPECT_EQ(c.distinct_unoriented_invariants(), (c.h + 1) / 2);
  }
}

TEST(K3Census, OddD0) {
  auto c = build_unbounded_family(23, 3);
  EXPECT_EQ(c.degree, 12);
  expect_certificate_invariants(c);
}

TEST(K3Census, FamilyPreconditions) {
  EXPECT_THROW(build_unbounded_family(13, 1), PreconditionError);
  EXPECT_THROW(build_unbounded_family(12, 1), PreconditionError);
  EXPECT_THROW(build_unbounded_family(23, 2), PreconditionError);
  EXPECT_THROW(build_unbounded_family(23, 0), PreconditionError);
  EXPECT_THROW(build_unbounded_family(3, 9), PreconditionError);
}

TEST(K3Census, NoWitnessWithinHeightTenFor23) {
  // only the complement scan supplies witnesses at the default bound
  auto c = build_unbounded_family(23, 1);
  EXPECT_EQ(c.witness_methods[1], "complement_search");
  EXPECT_EQ(c.witness_methods[2], "complement_search");
  auto tight = build_unbounded_family(23, 1, 14);
  EXPECT_EQ(tight.witness_methods[1], "bounded_search");
  expect_certificate_invariants(tight);
}

TEST(K3Census, GenusOnlyWhenBothSearchesFail) {
  auto c = build_unbounded_family(23, 1, 2, 1);
  EXPECT_TRUE(c.genus_only());
  EXPECT_EQ(c.missing_witnesses(), (std::vector<std::size_t>{1, 2}));
  EXPECT_FALSE(c.classes[1]);
  EXPECT_FALSE(c.complement_invariants[2]);
  EXPECT_NO_THROW(verify_certificate(c));
}

TEST(K3Census, VerifyRejectsTampering) {
  auto c = build_unbounded_family(23, 1);
  auto bad = c;
  bad.classes[1] = LatticeVector{0, 0, 1};
  EXPECT_THROW(verify_certificate(bad), PreconditionError);
  bad = c;
  bad.complement_invariants[2] = c.complement_invariants[1];
  EXPECT_THROW(verify_certificate(bad), PreconditionError);
  bad = c;
  bad.minus_two_free = false;
  EXPECT_THROW(verify_certificate(bad), PreconditionError);
  bad = c;
  bad.forms[1] = BinaryForm{1, 1, 6};
  EXPECT_THROW(verify_certificate(bad), PreconditionError);
}

TEST(K3Census, MinusTwoExamples) {
  Lattice tw = twist(Lattice{{2, 1, 0}, {1, 2, 0}, {0, 0, -1}}, -4);
  auto r = find_minus_two_class(tw, 10);
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(r.conclusive);
  EXPECT_EQ(r.method, MinusTwoMethod::congruence);

  auto u = find_minus_two_class(Lattice{{0, 1}, {1, 0}}, 5);
  EXPECT_TRUE(u.found);
  EXPECT_EQ(*u.witness, (LatticeVector{1, -1}));

  auto d = find_minus_two_class(Lattice{{2, 0}, {0, -2}}, 5);
  EXPECT_TRUE(d.found);
  EXPECT_EQ(*d.witness, (LatticeVector{0, 1}));

  EXPECT_FALSE(has_minus_two_class(Lattice{{2, 1}, {1, 2}}, 5));
  EXPECT_EQ(find_minus_two_class(Lattice{{2, 1}, {1, 2}}, 5).method, MinusTwoMethod::positive_definite);

  auto neg = find_minus_two_class(Lattice{{-2, 1}, {1, -2}}, 1);
  EXPECT_TRUE(neg.found);
  EXPECT_TRUE(neg.conclusive);
  EXPECT_EQ(neg.method, MinusTwoMethod::negative_definite);

  // 2x^2 - 6y^2 = -2 needs x^2 = -1 mod 3
  auto none = find_minus_two_class(Lattice{{2, 0}, {0, -6}}, 6);
  EXPECT_FALSE(none.found);
  EXPECT_FALSE(none.conclusive);
}

TEST(K3Census, MinusTwoMatchesBox) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<oracle::I64> e(-4, 4);
  for (int t = 0; t < 60; ++t) {
    oracle::Gram g{{e(rng), e(rng)}, {0, e(rng)}};
    g[1][0] = g[0][1];
    if (oracle::det(g) == 0) continue;
    auto r = find_minus_two_class(oracle::to_lattice(g), 4);
    bool box = !oracle::box_vectors(g, -2, 4).empty();
    if (r.method == MinusTwoMethod::box_search) EXPECT_EQ(r.found, box);
    if (r.found) EXPECT_EQ(norm(oracle::to_lattice(g), *r.witness), -2);
    if (r.conclusive && !r.found) EXPECT_FALSE(box);
  }
}

TEST(K3Census, TwistorCountExamples) {
  EXPECT_EQ(count_integral_twistor_classes(Lattice{{2, 1}, {1, 2}}, 2).count, 3u);
  EXPECT_EQ(count_integral_twistor_classes(Lattice{{2}}, 2).count, 1u);
  auto c = count_integral_twistor_classes(Lattice{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 2);
  EXPECT_EQ(c.count, 3u);
  for (const auto& v : c.representatives) {
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    EXPECT_GT(*it, 0);
  }
  EXPECT_THROW(count_integral_twistor_classes(Lattice{{0, 1}, {1, 0}}, 2), PreconditionError);
  EXPECT_THROW(count_integral_twistor_classes(Lattice{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}, 2),
               PreconditionError);
}

TEST(K3Census, TwistorCountIsHalfTheVectors) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_positive_definite(3, 5, rng);
    for (oracle::I64 d : {2, 4, 6, 12}) {
      auto c = count_integral_twistor_classes(oracle::to_lattice(g), d);
      EXPECT_EQ(2 * c.count, oracle::brute_vectors_of_norm(g, d).size());
    }
  }
}

TEST(K3Census, TauAndFourierMukai) {
  EXPECT_EQ(tau(12), 2);
  EXPECT_EQ(tau(2), 0);
  EXPECT_EQ(tau(60), 3);
  EXPECT_EQ(fm_partner_count(12), 2);
  EXPECT_EQ(fm_partner_count(60), 4);
  EXPECT_EQ(fm_partner_count(2), 1);
  EXPECT_EQ(fm_partner_count(4), 1);
  EXPECT_THROW(tau(7), PreconditionError);
  EXPECT_THROW(fm_partner_count(0), PreconditionError);
  EXPECT_THROW(fm_partner_count(-4), PreconditionError);
}

TEST(K3Census, MethodNames) {
  EXPECT_EQ(to_string(MinusTwoMethod::congruence), "congruence");
  EXPECT_EQ(to_string(MinusTwoMethod::box_search), "box_search");
}
