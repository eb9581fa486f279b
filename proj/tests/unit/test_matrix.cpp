#include <gtest/gtest.h>

#include "generators.hpp"
#include "jetorder/jets.hpp"
#include "jetorder/matrix.hpp"

using namespace jetorder;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows[0].size(), Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

/// Textbook Gaussian elimination over Q, kept independent of the library.
std::size_t plain_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(piv, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

SubspaceV mono1(std::initializer_list<int> exps) {
  std::vector<Exponent> pts;
  for (int e : exps) pts.push_back(Exponent{e});
  return SubspaceV::from_monomials(1, pts);
}

}  // namespace

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank_exact(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank_exact(RationalMatrix(2, 5, Rational(0))), 0u);
  EXPECT_EQ(rank_exact(from_rows({{1, 2}, {2, 4}, {3, 5}})), 2u);
}

TEST(Matrix, GenericRankExamples) {
  const auto jm = symbolic_jet_matrix(mono1({0, 1, 3}), 2);
  const auto r = generic_rank(jm);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.method, RankMethod::Symbolic);
  EXPECT_EQ(determinant(jm), Polynomial::monomial(Exponent{1}, 3));

  PolynomialMatrix row(1, 2, Polynomial(1));
  row(0, 0) = Polynomial::monomial(Exponent{1});
  row(0, 1) = Polynomial::monomial(Exponent{2});
  EXPECT_EQ(generic_rank(row).rank, 1u);
  EXPECT_EQ(generic_rank(symbolic_jet_matrix(mono1({0, 1, 2}), 1)).rank, 2u);
}

TEST(Matrix, RandomizedRankMatchesSymbolic) {
  testkit::Gen g(5);
  RankOptions randomized;
  randomized.symbolic_threshold = 0;
  for (int i = 0; i < 25; ++i) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(g.integer(1, 4));
    PolynomialMatrix m(rows, cols, Polynomial(2));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (g.integer(0, 2)) m(r, c) = g.polynomial(2, 2, 2);
    // Force a dependent row half the time.
    if (rows > 1 && g.integer(0, 1))
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Polynomial::variable(2, 1);
    const auto exact = generic_rank(m);
    randomized.seed = static_cast<std::uint64_t>(i);
    const auto sampled = generic_rank(m, randomized);
    EXPECT_EQ(exact.method, RankMethod::Symbolic);
    EXPECT_EQ(sampled.method, RankMethod::Randomized);
    EXPECT_EQ(sampled.rank, exact.rank);
    if (sampled.certified) {
      EXPECT_EQ(sampled.rank, std::min(rows, cols));
    }
  }
}

TEST(Matrix, NullspaceSpansKernel) {
  testkit::Gen g(6);
  for (int i = 0; i < 30; ++i) {
    const auto m = g.matrix(static_cast<std::size_t>(g.integer(1, 5)), static_cast<std::size_t>(g.integer(1, 6)));
    const auto ker = nullspace(m);
    EXPECT_EQ(ker.size() + rank_exact(m), m.cols());
    for (const auto& v : ker)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Matrix, BareissAgreesWithPlainElimination) {
  testkit::Gen g(7);
  for (int i = 0; i < 80; ++i) {
    auto m = g.matrix(static_cast<std::size_t>(g.integer(1, 7)), static_cast<std::size_t>(g.integer(1, 7)), 6);
    if (m.rows() > 2 && g.integer(0, 1))
      for (std::size_t c = 0; c < m.cols(); ++c) m(2, c) = m(0, c) * 3 - m(1, c) / 2;
    EXPECT_EQ(rank_exact(m), plain_rank(m));
    EXPECT_EQ(rank_exact(m.transpose()), rank_exact(m));
  }
}

TEST(Matrix, PolynomialDeterminantMatchesPointEvaluation) {
  testkit::Gen g(8);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    PolynomialMatrix m(n, n, Polynomial(2));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = g.polynomial(2, 2, 3);
    const Polynomial det = determinant(m);
    const auto pt = g.point(2);
    const auto at = evaluate(m, pt);
    // Determinant of the evaluated matrix by cofactor-free elimination.
    RationalMatrix a = at;
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a(p, c) == 0) ++p;
      if (p == n) {
        d = 0;
        break;
      }
      if (p != c) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
        d = -d;
      }
      d *= a(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        const Rational f = a(r, c) / a(c, c);
        for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      }
    }
    EXPECT_EQ(det.evaluate(pt), d);
  }
}

TEST(Matrix, EchelonBasis) {
  EchelonBasis e(3);
  EXPECT_TRUE(e.insert({1, 2, 3}));
  EXPECT_FALSE(e.insert({2, 4, 6}));
  EXPECT_TRUE(e.insert({0, 1, 0}));
  EXPECT_TRUE(e.contains({1, 0, 3}));
  EXPECT_FALSE(e.contains({0, 0, 1}));
  EXPECT_EQ(e.rank(), 2u);
}
