#include <gtest/gtest.h>

#include "generators.hpp"
#include "jetorder/error.hpp"
#include "jetorder/io.hpp"

using namespace jetorder;

namespace {

ErrorCode code_of(std::string_view doc) {
  try {
    parse_space(doc);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(ParseSpace, Examples) {
  const auto a = parse_space(R"({"nvars":1, "monomials":[[0],[1],[3]]})").space;
  EXPECT_TRUE(a.is_monomial());
  EXPECT_EQ(a.points(), (std::vector<Exponent>{{0}, {1}, {3}}));

  const auto b = parse_space(R"({"nvars":1, "polynomials":[{"[0]":"1"},{"[0]":"1","[1]":"1"}]})").space;
  EXPECT_FALSE(b.is_monomial());
  EXPECT_EQ(b.basis()[1], Polynomial::monomial(Exponent{0}) + Polynomial::monomial(Exponent{1}));

  EXPECT_EQ(code_of(R"({"nvars":1, "monomials":[[0],[0]]})"), ErrorCode::DuplicateMonomial);
}

TEST(ParseSpace, DistinctErrorCodes) {
  EXPECT_EQ(code_of(R"({"nvars":1, "polynomials":[{"[0]":"1/x"}]})"), ErrorCode::MalformedRational);
  EXPECT_EQ(code_of(R"({"nvars":1, "monomials":[[-1]]})"), ErrorCode::NegativeExponent);
  EXPECT_EQ(code_of(R"({"nvars":1, "polynomials":[{"[1]":"2"},{"[1]":"-1/3"}]})"), ErrorCode::DependentBasis);
  EXPECT_EQ(code_of(R"({"nvars":2, "monomials":[[0]]})"), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of(R"({"nvars":1, "monomials":)"), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of(R"({"monomials":[[0]]})"), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of(R"({"nvars":1, "monomials":[]})"), ErrorCode::EmptyBasis);
}

TEST(ParseSpace, Settings) {
  const auto f = parse_space(R"({"nvars":1,"monomials":[[0]],"seed":9,"symbolic_threshold":4,"random_trials":2,"search_bound":6})");
  EXPECT_EQ(f.settings.seed, 9u);
  EXPECT_EQ(f.settings.symbolic_threshold, 4u);
  EXPECT_EQ(f.settings.random_trials, 2);
  EXPECT_EQ(f.settings.search_bound, 6);
}

TEST(ParseSpace, RoundTripsRandomSpaces) {
  testkit::Gen g(61);
  for (int i = 0; i < 40; ++i) {
    const std::size_t nvars = static_cast<std::size_t>(g.integer(1, 3));
    if (i % 2 == 0) {
      const auto v = SubspaceV::from_monomials(nvars, g.monomial_set(nvars, 3, 1, 6));
      EXPECT_EQ(parse_space(serialize_space(v)).space, v);
    } else {
      std::vector<Polynomial> basis;
      for (int k = 0; k < 3; ++k) basis.push_back(g.polynomial(nvars, 3, 3));
      try {
        const auto v = SubspaceV::from_polynomials(nvars, basis);
        EXPECT_EQ(parse_space(serialize_space(v)).space, v);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DependentBasis);
      }
    }
  }
}

TEST(ParsePolytope, Variants) {
  EXPECT_EQ(parse_polytope(R"({"vertices":[[0,0],[3,0],[0,1],[2,1]]})").polytope.points().size(), 7u);
  const auto pv = parse_polytope(R"({"points":[[0,0],[1,0],[0,1]],"vertices":[[0,0],[1,0],[0,1]]})");
  EXPECT_EQ(pv.polytope.vertices().size(), 3u);
  const auto sp = parse_polytope(R"({"nvars":2,"monomials":[[0,0],[1,0],[0,1]],"search_bound":3})");
  EXPECT_EQ(sp.polytope.points().size(), 3u);
  EXPECT_EQ(sp.settings.search_bound, 3);
  EXPECT_THROW(parse_polytope(R"({"points":[[0,0]]})"), Error);
}

TEST(ParsePoints, Formats) {
  const auto pts = parse_points(R"({"points":[["1/2", 3], [0, "-4/6"]]})", 2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].to_string(), "(1/2, 3)");
  EXPECT_EQ(pts[1].to_string(), "(0, -2/3)");
  EXPECT_EQ(parse_point_list("1/2, 3", 2).to_string(), "(1/2, 3)");
  EXPECT_THROW(parse_point_list("1", 2), Error);
  EXPECT_THROW(parse_points(R"([[1.5]])", 1), Error);
}
