#include <gtest/gtest.h>

#include "k3lat/error.hpp"
#include "k3lat/polynomial.hpp"

using namespace k3lat;

TEST(Polynomial, BasicArithmetic) {
  Polynomial x = Polynomial::monomial(1);
  Polynomial p = x * x - Polynomial{1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p, (Polynomial{-1, 0, 1}));
  EXPECT_EQ(p(Rational(3)), 8);
  EXPECT_EQ((p + Polynomial{1, 0, -1}).degree(), -1);
  EXPECT_TRUE(Polynomial{}.is_zero());
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(p.scaled(Rational(1, 2)), (Polynomial{Rational(-1, 2), 0, Rational(1, 2)}));
  EXPECT_FALSE(p.scaled(Rational(1, 2)).has_integer_coefficients());
  EXPECT_EQ(p.integer_coefficients(), (std::vector<Integer>{-1, 0, 1}));
  EXPECT_THROW(Polynomial({Rational(1, 2)}).integer_coefficients(), InvalidArgument);
}

TEST(Polynomial, DivisionAndGcd) {
  Polynomial a{-1, 0, 0, 1};  // x^3 - 1
  Polynomial b{-1, 1};        // x - 1
  auto d = divide(a, b);
  EXPECT_EQ(d.quotient, (Polynomial{1, 1, 1}));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_EQ(gcd(a, Polynomial{-1, 0, 1}), b);
  EXPECT_EQ(a % (Polynomial{0, 0, 1}), (Polynomial{-1}));
  EXPECT_THROW(divide(a, Polynomial{}), InvalidArgument);
  EXPECT_EQ(derivative(a), (Polynomial{0, 0, 3}));
  // (x-1)^2 (x+2) -> (x-1)(x+2)
  Polynomial sq = Polynomial{-1, 1} * Polynomial{-1, 1} * Polynomial{2, 1};
  EXPECT_EQ(squarefree_part(sq), (Polynomial{-2, 1, 1}));
}

TEST(Polynomial, RealRootsAndSigns) {
  EXPECT_EQ(count_real_roots(Polynomial{1, 0, 1}), 0u);
  EXPECT_EQ(count_real_roots(Polynomial{-2, 0, 1}), 2u);
  EXPECT_EQ(count_real_roots(Polynomial{-1, 1} * Polynomial{-1, 1} * Polynomial{2, 1}), 2u);
  EXPECT_EQ(count_real_roots(cyclotomic_polynomial(5)), 0u);
  EXPECT_EQ(sign_changes(Polynomial{1, -3, 0, 1}), 2u);
}

TEST(Polynomial, Irreducibility) {
  EXPECT_TRUE(is_irreducible(Polynomial{1, 0, 1}));
  EXPECT_FALSE(is_irreducible(Polynomial{-1, 0, 1}));
  EXPECT_TRUE(is_irreducible(cyclotomic_polynomial(8)));
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  EXPECT_FALSE(is_irreducible(Polynomial{4, 0, 0, 0, 1}));
  // x^4 + 1 has no rational factorization
  EXPECT_TRUE(is_irreducible(Polynomial{1, 0, 0, 0, 1}));
  EXPECT_FALSE(is_irreducible(Polynomial{1, 0, 2, 0, 1}));
}

TEST(Polynomial, Cyclotomic) {
  EXPECT_EQ(cyclotomic_polynomial(1), (Polynomial{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (Polynomial{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (Polynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (Polynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (Polynomial{1, 0, -1, 0, 1}));
  // prod over d | 12 is x^12 - 1
  Polynomial prod{1};
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod = prod * cyclotomic_polynomial(d);
  EXPECT_EQ(prod, Polynomial::monomial(12) - Polynomial{1});
}

TEST(Polynomial, CharacteristicPolynomial) {
  RationalMatrix rot{{1, -1}, {1, 0}};
  EXPECT_EQ(characteristic_polynomial(rot), (Polynomial{1, -1, 1}));
  RationalMatrix m{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
  EXPECT_EQ(characteristic_polynomial(m), (Polynomial{-2, 1} * Polynomial{-3, 1} * Polynomial{-5, 1}));
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(to_string(Polynomial{1, -1, 1}), "x^2 - x + 1");
  EXPECT_EQ(to_string(Polynomial{}), "0");
}
