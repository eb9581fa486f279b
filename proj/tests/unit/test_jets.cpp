#include <gtest/gtest.h>

#include "generators.hpp"
#include "jetorder/error.hpp"
#include "jetorder/families.hpp"
#include "jetorder/jets.hpp"

using namespace jetorder;

namespace {

SubspaceV mono1(std::initializer_list<int> exps) {
  std::vector<Exponent> pts;
  for (int e : exps) pts.push_back(Exponent{e});
  return SubspaceV::from_monomials(1, pts);
}

EvalPoint at(std::initializer_list<Rational> c) { return EvalPoint::at(std::vector<Rational>(c)); }

/// True when a and b differ by a non-zero rational factor.
bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero() || a.term_count() != b.term_count()) return false;
  const Rational f = a.leading_term().second / b.leading_term().second;
  return a == b * f;
}

Polynomial mono(std::initializer_list<int> e, Rational c = 1) { return Polynomial::monomial(Exponent(e), c); }

}  // namespace

TEST(EvalPoint, Rendering) {
  EXPECT_EQ(EvalPoint::generic(2).to_string(), "GENERIC");
  EXPECT_EQ(at({Rational(1, 2), Rational(3)}).to_string(), "(1/2, 3)");
  EXPECT_EQ(EvalPoint::partial({std::nullopt, Rational(0)}).to_string(), "(?, 0)");
  EXPECT_TRUE(EvalPoint::generic(1).is_generic());
  EXPECT_TRUE(at({Rational(0)}).is_rational());
}

TEST(JetMatrix, IdentityForVeroneseAtOrigin) {
  const auto jm = jet_matrix(mono1({0, 1, 2}), 2, at({Rational(0)}));
  ASSERT_TRUE(jm.values.has_value());
  RationalMatrix id(3, 3, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(*jm.values, id);
}

TEST(JetMatrix, SymbolicRowsAreScaledDerivatives) {
  const auto jm = jet_matrix(mono1({0, 1, 3}), 2, EvalPoint::generic(1));
  ASSERT_TRUE(jm.symbolic.has_value());
  const auto& m = *jm.symbolic;
  const std::vector<std::vector<Polynomial>> expected{
      {mono({0}), Polynomial(1), Polynomial(1)},
      {mono({1}), mono({0}), Polynomial(1)},
      {mono({3}), mono({2}, 3), mono({1}, 3)}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(r, c), expected[r][c]) << r << "," << c;
}

TEST(JetMatrix, ConstantSection) {
  const auto jm = jet_matrix(mono1({0}), 0, at({Rational(7)}));
  ASSERT_TRUE(jm.values.has_value());
  EXPECT_EQ(jm.values->rows(), 1u);
  EXPECT_EQ((*jm.values)(0, 0), 1);
}

TEST(JetMatrix, PartialPointSubstitutesFixedCoordinates) {
  const auto v = SubspaceV::from_monomials(2, {Exponent{0, 0}, Exponent{1, 1}});
  const auto jm = jet_matrix(v, 1, EvalPoint::partial({std::nullopt, Rational(2)}));
  ASSERT_TRUE(jm.symbolic.has_value());
  EXPECT_EQ((*jm.symbolic)(1, 0), Polynomial::monomial(Exponent{1, 0}, 2));
}

TEST(Orders, InjectivityExamples) {
  EXPECT_EQ(n_inj_at(mono1({0, 1, 2}), at({Rational(5)})).n_inj, 2);
  const auto r = n_inj_at(mono1({0, 1, 3}), at({Rational(0)}));
  EXPECT_EQ(r.n_inj, 3);
  EXPECT_EQ(r.rank_profile, (std::vector<std::size_t>{1, 2, 2, 3}));
  EXPECT_EQ(r.gap_sequence, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.weierstrass_order, 0);
  EXPECT_EQ(n_inj_at(mono1({0}), at({Rational(-4)})).n_inj, 0);
  const auto g = n_inj_at(mono1({0, 1, 3}), EvalPoint::generic(1));
  EXPECT_EQ(g.n_inj, 2);
  EXPECT_EQ(g.weierstrass_order, -1);
}

TEST(Orders, SurjectivityExamples) {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto v = veronese_family(n, m).space;
      std::vector<Rational> pt(static_cast<std::size_t>(n), Rational(3, 7));
      EXPECT_EQ(n_surj_at(v, EvalPoint::at(pt)), m) << n << "," << m;
    }
  EXPECT_EQ(n_surj_at(mono1({1}), at({Rational(0)})), -1);
  EXPECT_EQ(n_surj_at(mono1({0, 1, 3}), at({Rational(0)})), 1);
}

TEST(Orders, WeierstrassScanExamples) {
  const auto r = weierstrass_scan(mono1({0, 1, 3}), {at({Rational(0)}), at({Rational(1)})});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].weierstrass_order, 0);
  EXPECT_EQ(r[1].weierstrass_order, -1);
  for (const auto& rep : weierstrass_scan(mono1({0, 1}), {at({Rational(0)}), at({Rational(9, 2)})}))
    EXPECT_EQ(rep.weierstrass_order, -1);
}

TEST(Orders, HirzebruchChartScan) {
  const auto fam = hirzebruch_family(1, 3, 1);
  const auto chart = vertex_chart(fam.polytope, *fam.polytope.vertex_index({0, 1}));
  const auto r = weierstrass_scan(chart, {at({Rational(0), Rational(1)}), at({Rational(1), Rational(1)})});
  EXPECT_EQ(r[0].n_inj, 4);
  EXPECT_EQ(r[0].weierstrass_order, 0);
  EXPECT_EQ(r[1].n_inj, 3);
  EXPECT_EQ(r[1].weierstrass_order, -1);
}

TEST(Minors, Examples) {
  const auto a = weierstrass_minors(mono1({0, 1, 3}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(proportional(a[0], mono({1}, 3)));
  const auto b = weierstrass_minors(mono1({0, 2}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(proportional(b[0], mono({1}, 2)));
  const auto c = weierstrass_minors(mono1({0, 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].is_constant());
}

TEST(Minors, RefusesOversizedEnumeration) {
  const auto v = hirzebruch_family(2, 5, 2).space;
  EXPECT_THROW(weierstrass_minors(v, {}, MinorOptions{100}), Error);
}

TEST(OrdersProperty, MinorsVanishExactlyAtWeierstrassPoints) {
  testkit::Gen g(31);
  for (int i = 0; i < 15; ++i) {
    const auto pts = g.monomial_set(1, 6, 2, 4);
    const auto v = SubspaceV::from_monomials(1, pts);
    const auto minors = weierstrass_minors(v);
    const int generic = n_inj_at(v, EvalPoint::generic(1)).n_inj;
    for (long c = -2; c <= 2; ++c) {
      const std::vector<Rational> pt{Rational(c)};
      const bool all_zero = std::all_of(minors.begin(), minors.end(),
                                        [&](const Polynomial& q) { return q.evaluate(pt) == 0; });
      EXPECT_EQ(all_zero, n_inj_at(v, EvalPoint::at(pt), {}, generic).n_inj > generic);
    }
  }
}
