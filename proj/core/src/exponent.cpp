#include "jetorder/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "jetorder/error.hpp"

namespace jetorder {

Exponent::Exponent(std::initializer_list<int> values) : Exponent(std::vector<int>(values)) {}

Exponent::Exponent(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_)
    if (v < 0)
      throw Error(ErrorCode::NegativeExponent,
                  "negative exponent entry " + std::to_string(v));
}

Exponent Exponent::unit(std::size_t nvars, std::size_t index) {
  Exponent e(nvars);
  e.values_.at(index) = 1;
  return e;
}

int Exponent::degree() const { return std::accumulate(values_.begin(), values_.end(), 0); }

bool Exponent::divides(const Exponent& other) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "exponent length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Exponent(std::move(out));
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "exponent length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Exponent(std::move(out));
}

std::optional<Exponent> shift(const Exponent& a, std::span<const long> w) {
  if (a.size() != w.size())
    throw Error(ErrorCode::DimensionMismatch, "weight length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long v = a[i] + w[i];
    if (v < 0) return std::nullopt;
    out[i] = static_cast<int>(v);
  }
  return Exponent(std::move(out));
}

IntVector to_int_vector(const Exponent& e) {
  return IntVector(e.values().begin(), e.values().end());
}

bool GradedOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return b.values() < a.values();
}

namespace {

void extend(std::size_t nvars, int remaining, std::vector<int>& prefix,
            std::vector<Exponent>& out) {
  if (prefix.size() + 1 == nvars) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    extend(nvars, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Exponent> exponents_up_to(std::size_t nvars, int n) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> prefix;
  // Descending lex inside each degree is exactly GradedOrder.
  for (int d = 0; d <= n; ++d) extend(nvars, d, prefix, out);
  return out;
}

Integer falling_factorial(const Exponent& m, const Exponent& a) {
  Integer out = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (a[i] > m[i]) return 0;
    for (int t = 0; t < a[i]; ++t) out *= m[i] - t;
  }
  return out;
}

Integer binomial(const Exponent& m, const Exponent& a) {
  Integer out = 1;
  for (std::size_t i = 0; i < m.size(); ++i) out *= binomial(m[i], a[i]);
  return out;
}

Integer factorial(const Exponent& a) {
  Integer out = 1;
  for (int v : a.values())
    for (int t = 2; t <= v; ++t) out *= t;
  return out;
}

std::string to_string(const Exponent& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "]";
}

std::string to_string(std::span<const long> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace jetorder
