#include <gtest/gtest.h>

#include "jetorder/error.hpp"
#include "jetorder/exponent.hpp"
#include "jetorder/rational.hpp"

using namespace jetorder;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4/2"), Rational(-2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "--1", "1/-2", "1e3"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedRational) << bad;
    }
  }
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Exponent, RejectsNegativeEntries) {
  try {
    Exponent e{1, -1};
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeExponent);
  }
}

TEST(Exponent, Arithmetic) {
  const Exponent a{2, 1}, b{1, 1};
  EXPECT_EQ(a + b, (Exponent{3, 2}));
  EXPECT_EQ(a - b, (Exponent{1, 0}));
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(to_string(a), "[2,1]");
  const IntVector w{-2, 0};
  EXPECT_EQ(shift(a, w), (Exponent{0, 1}));
  const IntVector w2{-3, 0};
  EXPECT_FALSE(shift(a, w2).has_value());
}

TEST(Exponent, FallingFactorialAndBinomial) {
  EXPECT_EQ(falling_factorial(Exponent{3}, Exponent{2}), 6);
  EXPECT_EQ(falling_factorial(Exponent{1}, Exponent{2}), 0);
  EXPECT_EQ(falling_factorial(Exponent{4, 3}, Exponent{2, 1}), 36);
  EXPECT_EQ(binomial(Exponent{4, 3}, Exponent{2, 1}), 18);
  EXPECT_EQ(factorial(Exponent{3, 2}), 12);
}

TEST(Exponent, GradedOrderPutsDegreeFirstThenX) {
  const auto cols = exponents_up_to(2, 2);
  const std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(cols, expected);
  EXPECT_EQ(exponents_up_to(3, 3).size(), 20u);
}
