#include "jetorder/diffop.hpp"

#include <algorithm>

#include "jetorder/error.hpp"

namespace jetorder {

namespace {

void check_same_nvars(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                "operands in " + std::to_string(a) + " and " + std::to_string(b) +
                    " variables");
}

// Visits every e with e <= a and e <= g componentwise.
template <class F>
void for_each_common_divisor(const Exponent& a, const Exponent& g, F&& f) {
  const std::size_t n = a.size();
  std::vector<int> bound(n), cur(n, 0);
  for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(a[i], g[i]);
  while (true) {
    f(Exponent(cur));
    std::size_t i = 0;
    while (i < n && cur[i] == bound[i]) cur[i++] = 0;
    if (i == n) return;
    ++cur[i];
  }
}

}  // namespace

IntVector weight(const OpTerm& term) {
  IntVector w(term.x_part.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = term.x_part[i] - term.d_part[i];
  return w;
}

DifferentialOperator DifferentialOperator::scalar(std::size_t nvars, const Rational& c) {
  return term(Exponent(nvars), Exponent(nvars), c);
}

DifferentialOperator DifferentialOperator::multiplication(const Polynomial& p) {
  DifferentialOperator out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term({e, Exponent(p.nvars())}, c);
  return out;
}

DifferentialOperator DifferentialOperator::partial(std::size_t nvars, std::size_t index) {
  return term(Exponent(nvars), Exponent::unit(nvars, index));
}

DifferentialOperator DifferentialOperator::term(const Exponent& x_part,
                                                const Exponent& d_part, const Rational& c) {
  check_same_nvars(x_part.size(), d_part.size());
  DifferentialOperator out(x_part.size());
  out.add_term({x_part, d_part}, c);
  return out;
}

int DifferentialOperator::order() const {
  int best = -1;
  for (const auto& [t, c] : terms_) best = std::max(best, t.d_part.degree());
  return best;
}

bool DifferentialOperator::is_weight_homogeneous() const {
  if (terms_.empty()) return true;
  const IntVector w = weight(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return weight(kv.first) == w; });
}

void DifferentialOperator::add_term(const OpTerm& t, const Rational& c) {
  check_same_nvars(nvars_, t.x_part.size());
  check_same_nvars(nvars_, t.d_part.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& other) {
  check_same_nvars(nvars_, other.nvars_);
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator-=(const DifferentialOperator& other) {
  check_same_nvars(nvars_, other.nvars_);
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string DifferentialOperator::to_string() const {
  if (terms_.empty()) return "0";
  // Largest differential part first, then largest coefficient monomial.
  std::vector<std::pair<OpTerm, Rational>> sorted(terms_.begin(), terms_.end());
  GradedOrder less;
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    if (a.first.d_part != b.first.d_part) return less(b.first.d_part, a.first.d_part);
    return less(b.first.x_part, a.first.x_part);
  });
  std::string out;
  bool first = true;
  for (const auto& [t, c] : sorted) {
    const Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string body;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.x_part[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += variable_name(nvars_, i);
      if (t.x_part[i] > 1) body += "^" + std::to_string(t.x_part[i]);
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.d_part[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "d" + variable_name(nvars_, i);
      if (t.d_part[i] > 1) body += "^" + std::to_string(t.d_part[i]);
    }
    if (body.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += body;
    }
  }
  return out;
}

Polynomial apply(const DifferentialOperator& op, const Polynomial& p) {
  check_same_nvars(op.nvars(), p.nvars());
  Polynomial out(p.nvars());
  for (const auto& [t, c] : op.terms()) {
    for (const auto& [m, pc] : p.terms()) {
      if (!t.d_part.divides(m)) continue;
      out.add_term(m - t.d_part + t.x_part, c * pc * Rational(falling_factorial(m, t.d_part)));
    }
  }
  return out;
}

DifferentialOperator compose(const DifferentialOperator& lhs, const DifferentialOperator& rhs) {
  check_same_nvars(lhs.nvars(), rhs.nvars());
  DifferentialOperator out(lhs.nvars());
  for (const auto& [t1, c1] : lhs.terms()) {
    for (const auto& [t2, c2] : rhs.terms()) {
      // x^b1 d^a1 x^g d^a2 with g = t2.x_part.
      for_each_common_divisor(t1.d_part, t2.x_part, [&](const Exponent& e) {
        const Integer k = binomial(t1.d_part, e) * falling_factorial(t2.x_part, e);
        out.add_term({t1.x_part + (t2.x_part - e), (t1.d_part - e) + t2.d_part},
                     c1 * c2 * Rational(k));
      });
    }
  }
  return out;
}

std::map<IntVector, DifferentialOperator> split_by_weight(const DifferentialOperator& op) {
  std::map<IntVector, DifferentialOperator> out;
  for (const auto& [t, c] : op.terms()) {
    auto [it, inserted] = out.try_emplace(weight(t), op.nvars());
    it->second.add_term(t, c);
  }
  return out;
}

}  // namespace jetorder
