#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace singknot;
using testutil::A;
using testutil::Bv;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<int> coef(-3, 3), aexp(-4, 4), bexp(-1, 1), count(0, 4);
  LaurentPoly p(arity);
  for (int t = count(rng); t > 0; --t) {
    std::vector<int> b(arity);
    for (int& x : b) x = bexp(rng);
    p.add_term(coef(rng), aexp(rng), b);
  }
  return p;
}

}  // namespace

TEST(Poly, AddIdentityAndCancellation) {
  auto p = A(3, 1) - Bv(1, 2, 1);
  EXPECT_EQ(p + LaurentPoly(1), p);
  EXPECT_TRUE((A(1, 0) + -A(1, 0)).is_zero());
}

TEST(Poly, AddBuildsAlexanderValue) {
  auto sum = A(-2, 1) + (A(1, 1) - A(-1, 1)) * Bv(1, 1, 1);
  EXPECT_EQ(sum.size(), 3U);
  EXPECT_EQ(sum.coefficient({-2, {0}}), 1);
  EXPECT_EQ(sum.coefficient({1, {1}}), 1);
  EXPECT_EQ(sum.coefficient({-1, {1}}), -1);
}

TEST(Poly, MulExamples) {
  auto d = loop_value();
  EXPECT_EQ(d * d, A(4, 0) + LaurentPoly::constant(2) + A(-4, 0));
  EXPECT_EQ(Bv(1, 1, 2) * Bv(1, -1, 2), LaurentPoly::constant(1, 2));
  auto p = A(2, 2) * Bv(2, 1, 2) - A(-1, 2);
  EXPECT_EQ(p * LaurentPoly::constant(1, 2), p);
}

TEST(Poly, ArityMismatch) {
  try {
    (void)(A(1, 1) + A(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
  EXPECT_THROW((void)(A(1, 0) * A(1, 3)), Error);
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, 2), q = random_poly(rng, 2), r = random_poly(rng, 2);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.pow(3), p * p * p);
  }
}

TEST(Poly, IdentifyIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(rng, 3), q = random_poly(rng, 3);
    EXPECT_EQ(identify_b_variables(p * q), identify_b_variables(p) * identify_b_variables(q));
    EXPECT_EQ(identify_b_variables(p + q), identify_b_variables(p) + identify_b_variables(q));
  }
}

TEST(Poly, IdentifyExamples) {
  EXPECT_EQ(identify_b_variables(Bv(1, 1, 2) * Bv(2, -1, 2)), LaurentPoly::constant(1, 1));
  EXPECT_EQ(identify_b_variables(testutil::expected_alexander(1)), A(-2, 1) + (A(1, 1) - A(-1, 1)) * Bv(1, 1, 1));
  EXPECT_EQ(identify_b_variables(A(3, 0)).arity(), 1U);
}

TEST(Poly, DecomposeJonesValue) {
  auto parts = decompose_by_b_pattern(testutil::expected_jones_T());
  ASSERT_EQ(parts.size(), 4U);
  EXPECT_EQ(parts.at({-1, -1}), A(-6, 0));
  EXPECT_EQ(parts.at({1, -1}), -A(4, 0) - A(-4, 0));
  EXPECT_EQ(parts.at({-1, 1}), -A(-4, 0) - A(-8, 0));
  EXPECT_EQ(parts.at({1, 1}), A(6, 0) + A(2, 0) + A(-2, 0) + A(-6, 0));
  EXPECT_EQ(recombine_b_pattern(parts, 2), testutil::expected_jones_T());
}

TEST(Poly, DecomposeAlexanderAndConstant) {
  auto delta = A(-2, 1) + (A(1, 1) - A(-1, 1)) * Bv(1, 1, 1);
  auto parts = decompose_by_b_pattern(delta);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts.at({0}), A(-2, 0));
  EXPECT_EQ(parts.at({1}), A(1, 0) - A(-1, 0));
  auto one = decompose_by_b_pattern(LaurentPoly::constant(1));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one.at({}), LaurentPoly::constant(1));
}

TEST(Poly, DecomposeOverflow) {
  auto p = Bv(1, -1, 1) + Bv(1, 0, 1) + Bv(1, 1, 1);
  try {
    decompose_by_b_pattern(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PatternOverflow);
  }
}

TEST(Poly, Substitute) {
  EXPECT_EQ(substitute_b(testutil::expected_alexander(1), 1, 0), A(-2, 2));
  auto p = A(5, 2) - Bv(2, 1, 2);
  EXPECT_EQ(substitute_b(p, 1, 3), p);
  EXPECT_EQ(substitute_b(Bv(1, 2, 1), 1, 3), LaurentPoly::constant(9, 1));
  EXPECT_EQ(substitute_b(Bv(1, -3, 1), 1, -1), LaurentPoly::constant(-1, 1));
  try {
    substitute_b(testutil::expected_jones_T(), 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeExponentAtZero);
  }
  try {
    substitute_b(Bv(1, -1, 1), 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralSubstitution);
  }
}

TEST(Poly, DegreeRange) {
  EXPECT_EQ(b_degree_range(testutil::expected_jones_T(), 1), std::make_optional(std::pair{-1, 1}));
  EXPECT_EQ(b_degree_range(testutil::expected_alexander(1), 2), std::make_optional(std::pair{0, 0}));
  EXPECT_FALSE(b_degree_range(LaurentPoly(2), 1).has_value());
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(99);
  for (std::size_t arity : {0U, 1U, 3U}) {
    for (int i = 0; i < 50; ++i) {
      auto p = random_poly(rng, arity);
      EXPECT_EQ(LaurentPoly::parse(p.to_string(), arity), p) << p.to_string();
    }
  }
  EXPECT_EQ(LaurentPoly(0).to_string(), "0");
  EXPECT_EQ(LaurentPoly::parse(testutil::expected_jones_T().to_string(), 2), testutil::expected_jones_T());
}
