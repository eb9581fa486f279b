#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jetorder/exponent.hpp"
#include "jetorder/rational.hpp"

namespace jetorder {

/// Sparse multivariate polynomial over Q. Terms are kept in GradedOrder and
/// no zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedOrder>;

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int degree() const;

  Rational coefficient(const Exponent& e) const;
  /// Largest term in GradedOrder; the polynomial must be non-zero.
  const Terms::value_type& leading_term() const;

  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes value for one variable; the variable count is unchanged.
  Polynomial substitute(std::size_t index, const Rational& value) const;

  /// d^a p, without the 1/a! normalisation.
  Polynomial derivative(const Exponent& a) const;

  /// Exact quotient this / divisor. Throws Error(Internal) when the division
  /// leaves a remainder.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Human-readable form using x, y, z for up to three variables and x1..xn
  /// otherwise, largest term first.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Variable names used for printing: x, y, z or x1, x2, ...
std::string variable_name(std::size_t nvars, std::size_t index);

}  // namespace jetorder
