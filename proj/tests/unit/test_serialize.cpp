#include <gtest/gtest.h>

#include "k3lat/binary_forms.hpp"
#include "k3lat/cm_twistor.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/error.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/k3_census.hpp"
#include "k3lat/serialize.hpp"

using namespace k3lat;
using k3lat::json::Json;

TEST(Serialize, Integers) {
  EXPECT_EQ(json::encode(Integer(-23)), Json(-23));
  Integer big = k3lat::pow(Integer(10), 30);
  EXPECT_EQ(json::encode(big), Json("1000000000000000000000000000000"));
  EXPECT_EQ(json::decode_integer(json::encode(big)), big);
  EXPECT_EQ(json::decode_integer(Json("-7")), -7);
  EXPECT_THROW(json::decode_integer(Json(1.5)), InvalidArgument);
  EXPECT_THROW(json::decode_integer(Json("abc")), InvalidArgument);
  EXPECT_EQ(json::decode_rational(json::encode(Rational(-2, 3))), Rational(-2, 3));
  EXPECT_EQ(json::decode_rational(Json(4)), Rational(4));
}

TEST(Serialize, MatricesAndLattices) {
  IntMatrix m{{1, -2, 3}, {4, 5, 6}};
  EXPECT_EQ(json::encode(m).dump(), "[[1,-2,3],[4,5,6]]");
  EXPECT_EQ(json::decode_int_matrix(json::encode(m)), m);
  Lattice l{{2, 1}, {1, 2}};
  EXPECT_EQ(json::decode_lattice(json::encode(l)), l);
  EXPECT_THROW(json::decode_int_matrix(Json::parse("[[1,2],[3]]")), InvalidArgument);
  EXPECT_THROW(json::decode_lattice(Json::parse("[[1,2],[3,4]]")), InvalidArgument);
  EXPECT_THROW(json::decode_int_matrix(Json::parse("{\"a\":1}")), InvalidArgument);
  RationalMatrix r{{Rational(1, 2), 0}, {3, Rational(-5, 7)}};
  EXPECT_EQ(json::decode_rational_matrix(json::encode(r)), r);
}

TEST(Serialize, FormsAndClassGroups) {
  BinaryForm f{2, -1, 3};
  EXPECT_EQ(json::encode(f).dump(), "[2,-1,3]");
  EXPECT_EQ(json::decode_form(json::encode(f)), f);
  auto g = class_group(-23);
  auto doc = json::encode(g);
  EXPECT_EQ(doc.dump(), R"({"discriminant":-23,"h":3,"forms":[[1,1,6],[2,1,3],[2,-1,3]]})");
  auto back = json::decode_class_group(doc);
  EXPECT_EQ(back.discriminant, g.discriminant);
  EXPECT_EQ(back.elements, g.elements);
  doc["h"] = 4;
  EXPECT_THROW(json::decode_class_group(doc), InvalidArgument);
  EXPECT_THROW(json::decode_form(Json::parse("[1,2]")), InvalidArgument);
}

TEST(Serialize, GenusSymbols) {
  for (const Lattice& l : {Lattice{{2, 1}, {1, 2}}, Lattice{{1, 0}, {0, 3}}, Lattice{{2, 1, 0}, {1, 12, 0}, {0, 0, -1}}}) {
    for (const auto& p : genus_primes(l)) {
      auto s = padic_symbol(l, p);
      EXPECT_EQ(json::decode_genus_symbol(json::encode(s)), s);
    }
  }
}

TEST(Serialize, EmbeddingsAndInvariants) {
  Lattice a2{{2, 1}, {1, 2}};
  for (const auto& e : embeddings(a2, a2, false)) EXPECT_EQ(json::decode_embedding(json::encode(e)), e);
  auto doc = json::encode(embeddings(a2, a2, false).front());
  doc["columns"][0][0] = 5;
  EXPECT_THROW(json::decode_embedding(doc), PreconditionError);

  auto inv = orbit_invariant(Lattice{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}, {1, 3, 1});
  EXPECT_EQ(json::decode_orbit_invariant(json::encode(inv)), inv);
}

TEST(Serialize, CertificateRoundTrip) {
  for (auto cert : {build_unbounded_family(23, 1), build_unbounded_family(23, 1, 2, 1)}) {
    auto doc = json::encode(cert);
    auto back = json::decode_certificate(doc);
    EXPECT_EQ(json::encode(back), doc);
    EXPECT_NO_THROW(verify_certificate(back));
  }
}

TEST(Serialize, CertificateRejectsMissingFields) {
  auto doc = json::encode(build_unbounded_family(7, 1));
  doc.erase("classes");
  EXPECT_THROW(json::decode_certificate(doc), InvalidArgument);
}

TEST(Serialize, FieldsAndElements) {
  for (const auto& k : {CMField::imaginary_quadratic(-3), CMField::cyclotomic(5), CMField::imaginary_quadratic(-5)}) {
    auto doc = json::encode(k);
    auto back = json::decode_field(doc);
    EXPECT_TRUE(back == k);
    auto x = k.generator().pow(3) + k.one().scaled(Rational(1, 2));
    EXPECT_EQ(json::decode_element(back, json::encode(x)), x);
  }
  // integral basis is optional on input
  auto k = json::decode_field(Json::parse(R"({"min_poly":[1,0,1],"conjugation":[[1,0],[0,-1]]})"));
  EXPECT_EQ(k.degree(), 2u);
  EXPECT_THROW(json::decode_field(Json::parse(R"({"min_poly":[1,0,1]})")), InvalidArgument);
}

TEST(Serialize, PeriodEmbedding) {
  auto k = CMField::imaginary_quadratic(-3);
  PeriodVector pv{Lattice{{2, -1}, {-1, 2}}, {k.one(), k.one() - k.generator()}};
  auto r = enumerate_period_embeddings(normalize_period(pv), 2);
  auto doc = json::encode(r.embeddings.front());
  EXPECT_TRUE(doc.contains("phi"));
  EXPECT_TRUE(doc.contains("lambda"));
  EXPECT_TRUE(doc.contains("lambda_prime"));
  EXPECT_TRUE(doc.contains("nu"));
  EXPECT_EQ(json::decode_embedding(doc["phi"]), r.embeddings.front().phi);
}
