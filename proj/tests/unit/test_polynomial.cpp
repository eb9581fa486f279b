#include <gtest/gtest.h>

#include "generators.hpp"
#include "jetorder/error.hpp"
#include "jetorder/polynomial.hpp"

using namespace jetorder;

namespace {

Polynomial x1() { return Polynomial::variable(1, 0); }
Polynomial var(std::size_t i) { return Polynomial::variable(2, i); }

}  // namespace

TEST(Polynomial, EvaluateExamples) {
  const Polynomial p = x1() * x1() + Polynomial::constant(1, Rational(1, 2));
  const std::vector<Rational> at2{Rational(2)};
  EXPECT_EQ(p.evaluate(at2), Rational(9, 2));
  EXPECT_EQ(Polynomial(1).evaluate(at2), 0);
  const Polynomial q = var(0) * var(1) - var(1);
  const std::vector<Rational> pt{Rational(3), Rational(5)};
  EXPECT_EQ(q.evaluate(pt), 10);
}

TEST(Polynomial, EvaluateRejectsWrongArity) {
  const std::vector<Rational> pt{Rational(1), Rational(2)};
  try {
    x1().evaluate(pt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Polynomial, DropsZeroCoefficients) {
  Polynomial p = x1() - x1();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), Polynomial::kZeroDegree);
  EXPECT_EQ(p.to_string(), "0");
}

TEST(Polynomial, ToStringListsLeadingTermFirst) {
  const Polynomial p = var(0) * var(1) * var(1) * Rational(3) - var(0) + Polynomial::constant(2, Rational(1, 2));
  EXPECT_EQ(p.to_string(), "3xy^2 - x + 1/2");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.leading_term().first, (Exponent{1, 2}));
}

TEST(Polynomial, DerivativeAndSubstitute) {
  const Polynomial p = Polynomial::monomial(Exponent{3, 2}, Rational(2));
  EXPECT_EQ(p.derivative(Exponent{2, 1}), Polynomial::monomial(Exponent{1, 1}, Rational(24)));
  EXPECT_TRUE(p.derivative(Exponent{4, 0}).is_zero());
  EXPECT_EQ(p.substitute(1, Rational(3)), Polynomial::monomial(Exponent{3, 0}, Rational(18)));
}

TEST(Polynomial, ExactDivision) {
  const Polynomial a = var(0) + var(1), b = var(0) - Polynomial::constant(2, 2);
  EXPECT_EQ((a * b).divide_exact(b), a);
  EXPECT_THROW((a * b + Polynomial::constant(2, 1)).divide_exact(b), Error);
}

TEST(PolynomialProperty, RingAxiomsOnRandomInputs) {
  testkit::Gen g(11);
  for (int i = 0; i < 60; ++i) {
    const auto a = g.polynomial(2, 3, 4), b = g.polynomial(2, 3, 4), c = g.polynomial(2, 3, 4);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    const auto pt = g.point(2);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
  }
}

TEST(PolynomialProperty, LeibnizRule) {
  testkit::Gen g(12);
  const Exponent dx{1, 0};
  for (int i = 0; i < 40; ++i) {
    const auto a = g.polynomial(2, 3, 4), b = g.polynomial(2, 3, 4);
    EXPECT_EQ((a * b).derivative(dx), a.derivative(dx) * b + a * b.derivative(dx));
  }
}

TEST(PolynomialProperty, SubstituteCommutesWithEvaluate) {
  testkit::Gen g(13);
  for (int i = 0; i < 40; ++i) {
    const auto a = g.polynomial(2, 4, 5);
    const auto pt = g.point(2);
    const Polynomial s = a.substitute(0, pt[0]);
    EXPECT_EQ(s.evaluate(pt), a.evaluate(pt));
    EXPECT_EQ(s.coefficient(Exponent{1, 0}), 0);
  }
}
