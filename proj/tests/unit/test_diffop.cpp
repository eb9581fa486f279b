#include <gtest/gtest.h>

#include "generators.hpp"
#include "jetorder/diffop.hpp"

using namespace jetorder;

namespace {

DifferentialOperator d1() { return DifferentialOperator::partial(1, 0); }
DifferentialOperator x1() { return DifferentialOperator::multiplication(Polynomial::variable(1, 0)); }
Polynomial mono(std::initializer_list<int> e, Rational c = 1) { return Polynomial::monomial(Exponent(e), c); }
DifferentialOperator term(std::initializer_list<int> x, std::initializer_list<int> d, Rational c = 1) {
  return DifferentialOperator::term(Exponent(x), Exponent(d), c);
}

IntVector lattice_sum(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

TEST(DiffOp, ApplyExamples) {
  EXPECT_EQ(apply(term({1}, {1}), mono({2})), mono({2}, 2));
  const auto sl = term({2}, {1}, -1) + term({1}, {0}, 2);
  EXPECT_TRUE(apply(sl, mono({2})).is_zero());
  EXPECT_EQ(apply(term({0}, {2}), mono({3})), mono({1}, 6));
}

TEST(DiffOp, ComposeExamples) {
  EXPECT_EQ(compose(d1(), x1()), term({1}, {1}) + DifferentialOperator::scalar(1, 1));
  const auto e = term({1}, {1});
  EXPECT_EQ(compose(e, e), term({2}, {2}) + term({1}, {1}));
  testkit::Gen g(3);
  for (int i = 0; i < 10; ++i) {
    const auto op = g.op(2, 3, 2, 4);
    EXPECT_EQ(compose(DifferentialOperator::scalar(2, 1), op), op);
    EXPECT_EQ(compose(op, DifferentialOperator::scalar(2, 1)), op);
  }
}

TEST(DiffOp, OrderAndHomogeneity) {
  EXPECT_EQ(DifferentialOperator(1).order(), -1);
  EXPECT_EQ(DifferentialOperator::scalar(1, 3).order(), 0);
  EXPECT_EQ((term({1}, {2}) + term({5}, {0})).order(), 2);
  EXPECT_TRUE((term({1, 0}, {1, 0}) + term({0, 1}, {0, 1})).is_weight_homogeneous());
  EXPECT_FALSE((d1() + x1()).is_weight_homogeneous());
}

TEST(DiffOp, ToString) {
  EXPECT_EQ((term({2}, {1}, -1) + term({1}, {0}, 2)).to_string(), "-x^2*dx + 2*x");
  EXPECT_EQ(DifferentialOperator(2).to_string(), "0");
}

TEST(DiffOp, SplitByWeightExamples) {
  const auto euler = term({1, 0}, {1, 0}) + term({0, 1}, {0, 1});
  const auto s1 = split_by_weight(euler);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1.at(IntVector{0, 0}), euler);

  const auto s2 = split_by_weight(d1() + term({2}, {0}));
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2.at(IntVector{-1}), d1());
  EXPECT_EQ(s2.at(IntVector{2}), term({2}, {0}));

  const auto s3 = split_by_weight(term({1}, {2}) + term({2}, {1}));
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_EQ(s3.at(IntVector{-1}), term({1}, {2}));
  EXPECT_EQ(s3.at(IntVector{1}), term({2}, {1}));
}

TEST(DiffOpProperty, ApplyIsBilinear) {
  testkit::Gen g(21);
  for (int i = 0; i < 40; ++i) {
    const auto a = g.op(2, 2, 2, 3), b = g.op(2, 2, 2, 3);
    const auto p = g.polynomial(2, 4, 4), q = g.polynomial(2, 4, 4);
    const Rational c = g.rational();
    EXPECT_EQ(apply(a + b, p), apply(a, p) + apply(b, p));
    EXPECT_EQ(apply(a, p + q * c), apply(a, p) + apply(a, q) * c);
  }
}

TEST(DiffOpProperty, CompositionIsAssociativeAndMatchesApply) {
  testkit::Gen g(22);
  for (int i = 0; i < 30; ++i) {
    const auto a = g.op(2, 2, 2, 3), b = g.op(2, 2, 2, 3), c = g.op(2, 2, 2, 3);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    const auto p = g.polynomial(2, 5, 4);
    EXPECT_EQ(apply(compose(a, b), p), apply(a, apply(b, p)));
  }
}

TEST(DiffOpProperty, WeightBookkeeping) {
  testkit::Gen g(23);
  for (int i = 0; i < 40; ++i) {
    const auto op = g.op(2, 3, 2, 5);
    DifferentialOperator sum(2);
    for (const auto& [w, part] : split_by_weight(op)) {
      EXPECT_TRUE(part.is_weight_homogeneous());
      EXPECT_FALSE(part.is_zero());
      sum += part;
      const Exponent m = g.exponent(2, 5);
      const Polynomial image = apply(part, Polynomial::monomial(m));
      if (image.is_zero()) continue;
      ASSERT_TRUE(image.is_monomial());
      EXPECT_EQ(to_int_vector(image.leading_term().first), lattice_sum(to_int_vector(m), w));
    }
    EXPECT_EQ(sum, op);
  }
}
