#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetorder/rational.hpp"

namespace jetorder {

/// Integer vector that may have negative entries: operator weights, lattice
/// points and polytope directions.
using IntVector = std::vector<long>;

/// Multi-index of non-negative integers with a fixed variable count.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : values_(nvars, 0) {}
  Exponent(std::initializer_list<int> values);
  explicit Exponent(std::vector<int> values);

  static Exponent unit(std::size_t nvars, std::size_t index);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  int degree() const;

  /// Componentwise <=.
  bool divides(const Exponent& other) const;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::vector<int> values_;
};

Exponent operator+(const Exponent& a, const Exponent& b);
/// a - b; requires b.divides(a).
Exponent operator-(const Exponent& a, const Exponent& b);

/// a + w when every entry stays non-negative.
std::optional<Exponent> shift(const Exponent& a, std::span<const long> w);

IntVector to_int_vector(const Exponent& e);

/// Total degree first, then lexicographic with the first variable most
/// significant, so x precedes y inside a degree.
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponents of total degree <= n, in GradedOrder.
std::vector<Exponent> exponents_up_to(std::size_t nvars, int n);

/// (m)_a = prod_i m_i (m_i - 1) ... (m_i - a_i + 1).
Integer falling_factorial(const Exponent& m, const Exponent& a);

/// prod_i C(m_i, a_i).
Integer binomial(const Exponent& m, const Exponent& a);

/// a! = prod_i a_i!.
Integer factorial(const Exponent& a);

std::string to_string(const Exponent& e);
std::string to_string(std::span<const long> v);

}  // namespace jetorder
