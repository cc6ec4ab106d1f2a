#include <gtest/gtest.h>

#include "eigconf/errors.hpp"
#include "eigconf/rational.hpp"
#include "eigconf/sign.hpp"
#include "test_support.hpp"

namespace eigconf {
namespace {

using testing::q;

TEST(Rational, CanonicalFormOnConstruction) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r, q(-3, 2));
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST(Rational, ParseLiterals) {
  EXPECT_EQ(Rational::parse("-7/3"), q(-7, 3));
  EXPECT_EQ(Rational::parse("42"), q(42));
  EXPECT_EQ(Rational::parse("  +10/4 \n"), q(5, 2));
  EXPECT_EQ(Rational::parse("0/5"), q(0));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "--1", "1/-2", "1 2"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, SignOf) {
  EXPECT_EQ(sign_of(q(3, 7)), Sign::Plus);
  EXPECT_EQ(sign_of(q(0)), Sign::Zero);
  EXPECT_EQ(sign_of(q(-2)), Sign::Minus);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(q(1) / q(0), DomainError); }

TEST(Rational, ArithmeticIsExactProperty) {
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = q(static_cast<long>(rng.uniform(-1000000, 1000000)), static_cast<long>(rng.uniform(1, 9999)));
    Rational b = q(static_cast<long>(rng.uniform(-1000000, 1000000)), static_cast<long>(rng.uniform(1, 9999)));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    // Canonical form is unique per value, so the printed form round-trips.
    EXPECT_EQ(Rational::parse(a.to_string()), a);
    EXPECT_EQ(Rational::parse(a.to_string()).to_string(), a.to_string());
  }
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(q(1, 3), q(2, 3)), q(1, 2));
  EXPECT_EQ(simplest_between(q(-5, 2), q(7)), q(0));
  EXPECT_EQ(simplest_between(q(3), q(3)), q(3));
  EXPECT_EQ(simplest_between(q(31, 10), q(16, 5)), q(16, 5));
  EXPECT_EQ(simplest_between(q(-22, 7), q(-3)), q(-3));
  EXPECT_EQ(simplest_between(q(314, 100), q(315, 100)), q(22, 7));
}

SignSequence signs(std::string_view s) { return parse_signs(s); }

TEST(SignSequences, VariationCount) {
  EXPECT_EQ(variation_count(signs("00-0-0+-+")), 3);
  EXPECT_EQ(variation_count(signs("")), 0);
  EXPECT_EQ(variation_count(signs("+++")), 0);
  EXPECT_EQ(variation_count(signs("-+-+")), 3);
  EXPECT_EQ(variation_count(signs("+0-+")), 2);
}

TEST(SignSequences, LeadingZeroCount) {
  EXPECT_EQ(leading_zero_count(signs("00-0-0+-+")), 2);
  EXPECT_EQ(leading_zero_count(signs("+00")), 0);
  EXPECT_EQ(leading_zero_count(signs("000")), 3);
  EXPECT_EQ(leading_zero_count(signs("")), 0);
}

TEST(SignSequences, TotalOrder) {
  EXPECT_LT(Sign::Minus, Sign::Zero);
  EXPECT_LT(Sign::Zero, Sign::Plus);
}

TEST(SignSequences, ParseRejectsOtherCharacters) { EXPECT_THROW(parse_signs("+-x"), ParseError); }

TEST(SignSequences, InvariantsProperty) {
  SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    SignSequence s;
    auto len = static_cast<std::size_t>(rng.uniform(0, 12));
    for (std::size_t k = 0; k < len; ++k) s.push_back(static_cast<Sign>(rng.uniform(-1, 1)));

    SignSequence nonzero;
    for (Sign x : s)
      if (x != Sign::Zero) nonzero.push_back(x);
    EXPECT_EQ(variation_count(s), variation_count(nonzero));

    SignSequence reversed(s.rbegin(), s.rend());
    EXPECT_EQ(variation_count(s), variation_count(reversed));

    bool all_zero = std::all_of(s.begin(), s.end(), [](Sign x) { return x == Sign::Zero; });
    EXPECT_EQ(leading_zero_count(s) == static_cast<int>(s.size()), all_zero);
  }
}

}  // namespace
}  // namespace eigconf
