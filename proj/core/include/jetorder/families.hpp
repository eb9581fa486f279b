#pragma once

#include <string>
#include <variant>
#include <vector>

#include "jetorder/subspace.hpp"
#include "jetorder/toric.hpp"

namespace jetorder {

enum class Source { ClosedForm, Oracle, Count };
std::string_view to_string(Source p);

struct VeroneseParams {
  int n = 1;
  int m = 1;
};

struct HirzebruchParams {
  int r = 1;
  int k = 1;
  int l = 1;
};

struct Expectation {
  std::string name;
  long value = 0;
  Source source = Source::ClosedForm;
};

/// A worked family with its space, polytope and closed-form expectations.
struct FamilySpec {
  std::variant<VeroneseParams, HirzebruchParams> params;
  SubspaceV space;
  LatticePolytope polytope;
  std::vector<Expectation> expected;

  std::string name() const;
  long expect(const std::string& key) const;
};

/// All monomials of total degree <= m in n variables.
std::vector<Exponent> veronese_points(int n, int m);

/// x^i y^j with 0 <= i + r j <= k, 0 <= j <= l, i >= 0.
std::vector<Exponent> hirzebruch_points(int r, int k, int l);

FamilySpec veronese_family(int n, int m);

/// Requires r >= 1, l >= 1 and k - l r >= 0 (Error(DomainError) otherwise).
FamilySpec hirzebruch_family(int r, int k, int l);

}  // namespace jetorder
