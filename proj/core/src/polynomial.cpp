#include "jetorder/polynomial.hpp"

#include <algorithm>

#include "jetorder/error.hpp"

namespace jetorder {

namespace {

void check_same_nvars(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                "polynomials in " + std::to_string(a) + " and " + std::to_string(b) +
                    " variables");
}

}  // namespace

std::string variable_name(std::size_t nvars, std::size_t index) {
  if (nvars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Exponent::unit(nvars, index));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) check_same_nvars(nvars_, e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_nvars(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_nvars(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a.nvars_, b.nvars_);
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(nvars_));
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
      for (int t = 0; t < e[i]; ++t) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(std::size_t index, const Rational& value) const {
  if (index >= nvars_) throw Error(ErrorCode::DimensionMismatch, "substitution index");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> v = e.values();
    Rational coeff = c;
    for (int t = 0; t < v[index]; ++t) coeff *= value;
    v[index] = 0;
    out.add_term(Exponent(std::move(v)), coeff);
  }
  return out;
}

Polynomial Polynomial::derivative(const Exponent& a) const {
  if (a.size() != nvars_) check_same_nvars(nvars_, a.size());
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (!a.divides(e)) continue;
    out.add_term(e - a, c * Rational(falling_factorial(e, a)));
  }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same_nvars(nvars_, divisor.nvars_);
  if (divisor.is_zero()) throw Error(ErrorCode::Internal, "division by zero polynomial");
  const auto& [lead_e, lead_c] = divisor.leading_term();
  if (divisor.is_monomial()) {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (!lead_e.divides(e)) throw Error(ErrorCode::Internal, "inexact polynomial division");
      out.terms_.emplace_hint(out.terms_.end(), e - lead_e, c / lead_c);
    }
    return out;
  }
  Polynomial quotient(nvars_);
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const auto& [e, c] = rest.leading_term();
    if (!lead_e.divides(e)) throw Error(ErrorCode::Internal, "inexact polynomial division");
    const Exponent qe = e - lead_e;
    const Rational qc = c / lead_c;
    quotient.add_term(qe, qc);
    for (const auto& [de, dc] : divisor.terms_) rest.add_term(de + qe, -qc * dc);
  }
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty() && nvars_ > 3) mono += "*";
      mono += variable_name(nvars_, i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + (mag.get_den() == 1 ? "" : "*");
      out += mono;
    }
  }
  return out;
}

}  // namespace jetorder
