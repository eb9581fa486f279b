#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetorder/exponent.hpp"
#include "jetorder/polynomial.hpp"

namespace jetorder {

/// Finite-dimensional subspace of Q[x_1, ..., x_n] given by an ordered,
/// linearly independent basis. When every basis element is a single monomial
/// the exponents are kept as the point set of the subspace.
class SubspaceV {
 public:
  /// Validates independence by exact rank. Monomial structure is detected
  /// automatically (basis elements that are scalar multiples of monomials are
  /// normalised to coefficient 1).
  static SubspaceV from_polynomials(std::size_t nvars, std::vector<Polynomial> basis);
  /// Throws Error(DuplicateMonomial) on repeated exponents.
  static SubspaceV from_monomials(std::size_t nvars, std::vector<Exponent> points);

  std::size_t nvars() const { return nvars_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_monomial() const { return points_.has_value(); }
  /// Point set; throws Error(DomainError) for a non-monomial subspace.
  const std::vector<Exponent>& points() const;
  int max_degree() const { return max_degree_; }

  /// Index of x^m in a monomial basis.
  std::optional<std::size_t> index_of(const Exponent& m) const;

  /// Coordinates of p in the basis, or nullopt when p lies outside the span.
  std::optional<std::vector<Rational>> coordinates(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return coordinates(p).has_value(); }

  friend bool operator==(const SubspaceV&, const SubspaceV&) = default;

 private:
  SubspaceV() = default;

  std::size_t nvars_ = 0;
  std::vector<Polynomial> basis_;
  std::optional<std::vector<Exponent>> points_;
  int max_degree_ = 0;
};

}  // namespace jetorder
