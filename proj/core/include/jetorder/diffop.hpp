#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "jetorder/exponent.hpp"
#include "jetorder/polynomial.hpp"
#include "jetorder/rational.hpp"

namespace jetorder {

/// Normally ordered term x^x_part d^d_part; all x's stand left of all d's.
struct OpTerm {
  Exponent x_part;
  Exponent d_part;

  friend auto operator<=>(const OpTerm&, const OpTerm&) = default;
  friend bool operator==(const OpTerm&, const OpTerm&) = default;
};

/// Weight of a term, x_part - d_part.
IntVector weight(const OpTerm& term);

/// Element of the Weyl algebra over Q with polynomial coefficients, stored as
/// a finite combination of normally ordered terms.
class DifferentialOperator {
 public:
  using Terms = std::map<OpTerm, Rational>;

  DifferentialOperator() = default;
  explicit DifferentialOperator(std::size_t nvars) : nvars_(nvars) {}

  static DifferentialOperator scalar(std::size_t nvars, const Rational& c);
  static DifferentialOperator multiplication(const Polynomial& p);
  /// d/dx_index.
  static DifferentialOperator partial(std::size_t nvars, std::size_t index);
  static DifferentialOperator term(const Exponent& x_part, const Exponent& d_part,
                                   const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum |d_part| over the support; -1 for the zero operator.
  int order() const;
  bool is_weight_homogeneous() const;

  void add_term(const OpTerm& t, const Rational& c);

  DifferentialOperator& operator+=(const DifferentialOperator& other);
  DifferentialOperator& operator-=(const DifferentialOperator& other);
  DifferentialOperator& operator*=(const Rational& c);

  friend DifferentialOperator operator+(DifferentialOperator a,
                                        const DifferentialOperator& b) {
    return a += b;
  }
  friend DifferentialOperator operator-(DifferentialOperator a,
                                        const DifferentialOperator& b) {
    return a -= b;
  }
  friend DifferentialOperator operator*(DifferentialOperator a, const Rational& c) {
    return a *= c;
  }
  friend DifferentialOperator operator*(const Rational& c, DifferentialOperator a) {
    return a *= c;
  }
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&);

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// D . p
Polynomial apply(const DifferentialOperator& op, const Polynomial& p);

/// Normally ordered product lhs o rhs, using
/// d^a o x^g = sum_{e <= a, e <= g} C(a, e) (g)_e x^(g - e) d^(a - e).
DifferentialOperator compose(const DifferentialOperator& lhs,
                             const DifferentialOperator& rhs);

/// Splits an operator into weight-homogeneous components keyed by weight.
std::map<IntVector, DifferentialOperator> split_by_weight(const DifferentialOperator& op);

}  // namespace jetorder
