#include <gtest/gtest.h>

#include "lindep/exact_poly.hpp"

using namespace lindep;

namespace {

ExactPoly P(std::vector<long long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return ExactPoly(b);
}

}  // namespace

TEST(ExactPoly, Basics) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({}).degree(), -1);
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(P({3, 0, 1}).is_monic());
  EXPECT_EQ(P({5}).coeff(7), 0);
  EXPECT_EQ(ExactPoly::linear_factor(3), P({-3, 1}));
  EXPECT_EQ(ExactPoly::monomial(2, 4), P({0, 0, 4}));
}

TEST(ExactPoly, Arithmetic) {
  const auto a = P({1, 1});   // x + 1
  const auto b = P({-1, 1});  // x - 1
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ(a - a, P({}));
  EXPECT_EQ(-a, P({-1, -1}));
  EXPECT_EQ(a.pow(3), P({1, 3, 3, 1}));
  EXPECT_EQ(a.pow(0), P({1}));
  EXPECT_EQ(P({1, 3, 3, 1}).derivative(), P({3, 6, 3}));
  EXPECT_EQ(P({1, 3, 3, 1}).evaluate(BigInt(2)), 27);
  EXPECT_EQ(P({0, 0, 1}).evaluate(BigRational(1, 2)), BigRational(1, 4));
}

TEST(ExactPoly, ToString) {
  EXPECT_EQ(P({0, 0, -3, 0, 1}).to_string(), "x^4 - 3x^2");
  EXPECT_EQ(P({-2, -3, 0, 1}).to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(P({}).to_string(), "0");
  EXPECT_EQ(P({0, -1}).to_string(), "-x");
  EXPECT_EQ(P({7}).to_string(), "7");
}

TEST(ExactPoly, ContentAndPrimitive) {
  const auto f = P({6, -4, 2});
  EXPECT_EQ(f.content(), 2);
  EXPECT_EQ(f.primitive_part(), P({3, -2, 1}));
  EXPECT_EQ(P({6, 0, -2}).content(), -2);
}

TEST(ExactPoly, DivisionAndGcd) {
  const auto f = P({-1, 0, 1}) * P({2, 1});
  EXPECT_EQ(exact_quotient(f, P({2, 1})), P({-1, 0, 1}));
  EXPECT_THROW(exact_quotient(f, P({5, 1})), std::domain_error);
  EXPECT_EQ(gcd(f, P({1, 1}) * P({3, 1})), P({1, 1}));
  EXPECT_EQ(gcd(P({2, 2}), P({4, 4})), P({1, 1}));
  EXPECT_TRUE(pseudo_remainder(f, P({1, 1})).is_zero());
}

TEST(ExactPoly, SquarefreeDecomposition) {
  // (x-2)(x+1)^2 (x-1)^3
  const auto f = P({-2, 1}) * P({1, 1}).pow(2) * P({-1, 1}).pow(3);
  const auto parts = squarefree_decomposition(f);
  ExactPoly rebuilt = P({1});
  for (const auto& [g, m] : parts) {
    rebuilt *= g.pow(m);
    if (m == 1) EXPECT_EQ(g, P({-2, 1}));
    if (m == 2) EXPECT_EQ(g, P({1, 1}));
    if (m == 3) EXPECT_EQ(g, P({-1, 1}));
  }
  EXPECT_EQ(rebuilt, f);
}

TEST(ExactPoly, Json) {
  const auto f = P({-3, 0, 1}) * ExactPoly::constant(BigInt("123456789012345678901234567890"));
  EXPECT_EQ(exact_poly_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(P({1, -1})), R"({"coeffs":["1","-1"]})");
  EXPECT_THROW(exact_poly_from_json("{}"), std::exception);
}
