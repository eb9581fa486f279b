#include "jetorder/jets.hpp"

#include <algorithm>
#include <set>

#include "jetorder/error.hpp"

namespace jetorder {

EvalPoint EvalPoint::generic(std::size_t nvars) {
  EvalPoint p;
  p.coords_.assign(nvars, std::nullopt);
  return p;
}

EvalPoint EvalPoint::at(std::vector<Rational> coords) {
  EvalPoint p;
  for (auto& c : coords) p.coords_.emplace_back(std::move(c));
  return p;
}

EvalPoint EvalPoint::partial(std::vector<std::optional<Rational>> coords) {
  EvalPoint p;
  p.coords_ = std::move(coords);
  return p;
}

bool EvalPoint::is_generic() const {
  return std::none_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.has_value(); });
}

bool EvalPoint::is_rational() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<Rational> EvalPoint::rational_coords() const {
  if (!is_rational()) throw Error(ErrorCode::DomainError, "point has symbolic coordinates");
  std::vector<Rational> out;
  for (const auto& c : coords_) out.push_back(*c);
  return out;
}

std::string EvalPoint::to_string() const {
  if (is_generic() && !coords_.empty()) return "GENERIC";
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i] ? coords_[i]->get_str() : "?";
  }
  return out + ")";
}

std::size_t JetMatrix::rows() const {
  if (values) return values->rows();
  if (symbolic) return symbolic->rows();
  return 0;
}

PolynomialMatrix symbolic_jet_matrix(const SubspaceV& v, int order) {
  if (order < 0) throw Error(ErrorCode::DomainError, "jet order must be non-negative");
  const auto cols = exponents_up_to(v.nvars(), order);
  PolynomialMatrix m(v.dim(), cols.size(), Polynomial(v.nvars()));
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Polynomial d = v.basis()[r].derivative(cols[c]);
      if (!d.is_zero()) d *= Rational(1) / Rational(factorial(cols[c]));
      m(r, c) = std::move(d);
    }
  }
  return m;
}

JetMatrix jet_matrix(const SubspaceV& v, int order, const EvalPoint& point) {
  if (point.nvars() != v.nvars())
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(point.nvars()) + " coordinates, space has " +
                    std::to_string(v.nvars()) + " variables");
  JetMatrix jm;
  jm.order = order;
  jm.columns = exponents_up_to(v.nvars(), order);
  jm.point = point;
  PolynomialMatrix sym = symbolic_jet_matrix(v, order);
  if (point.is_rational()) {
    jm.values = evaluate(sym, point.rational_coords());
    return jm;
  }
  for (std::size_t i = 0; i < point.nvars(); ++i) {
    const auto& c = point.coords()[i];
    if (!c) continue;
    for (std::size_t r = 0; r < sym.rows(); ++r)
      for (std::size_t col = 0; col < sym.cols(); ++col)
        sym(r, col) = sym(r, col).substitute(i, *c);
  }
  jm.symbolic = std::move(sym);
  return jm;
}

RankResult jet_rank(const JetMatrix& jm, const RankOptions& options) {
  if (jm.values) return {rank_exact(*jm.values), RankMethod::Exact, true};
  return generic_rank(*jm.symbolic, options);
}

namespace {

void merge_method(OrderReport& report, const RankResult& r) {
  if (r.method == RankMethod::Randomized) report.method = RankMethod::Randomized;
  else if (r.method == RankMethod::Symbolic && report.method == RankMethod::Exact)
    report.method = RankMethod::Symbolic;
  report.certified = report.certified && r.certified;
}

}  // namespace

OrderReport n_inj_at(const SubspaceV& v, const EvalPoint& point, const RankOptions& options,
                     std::optional<int> generic_n_inj) {
  OrderReport report;
  report.point = point;
  bool reached = false;
  for (int n = 0; n <= v.max_degree(); ++n) {
    const RankResult r = jet_rank(jet_matrix(v, n, point), options);
    merge_method(report, r);
    report.rank_profile.push_back(r.rank);
    if (r.rank == v.dim()) {
      report.n_inj = n;
      reached = true;
      break;
    }
  }
  if (!reached)
    throw Error(ErrorCode::Internal,
                "Taylor map never injective up to degree " + std::to_string(v.max_degree()) +
                    " at " + point.to_string());
  for (std::size_t i = 1; i < report.rank_profile.size(); ++i)
    if (report.rank_profile[i] > report.rank_profile[i - 1])
      report.gap_sequence.push_back(static_cast<int>(i));

  report.n_surj = n_surj_at(v, point, options);

  int generic = 0;
  if (point.is_generic()) generic = report.n_inj;
  else if (generic_n_inj) generic = *generic_n_inj;
  else generic = n_inj_at(v, EvalPoint::generic(v.nvars()), options).n_inj;
  report.weierstrass_order = report.n_inj - generic - 1;
  return report;
}

SurjReport n_surj_report(const SubspaceV& v, const EvalPoint& point,
                         const RankOptions& options) {
  SurjReport out;
  for (int k = 0;; ++k) {
    const std::size_t cols = static_cast<std::size_t>(
        binomial(static_cast<long>(k + v.nvars()), static_cast<long>(v.nvars())).get_ui());
    if (cols > v.dim()) break;
    const RankResult r = jet_rank(jet_matrix(v, k, point), options);
    if (r.method == RankMethod::Randomized) out.method = RankMethod::Randomized;
    else if (r.method == RankMethod::Symbolic && out.method == RankMethod::Exact)
      out.method = RankMethod::Symbolic;
    out.certified = out.certified && r.certified;
    if (r.rank != cols) break;
    out.n_surj = k;
  }
  return out;
}

int n_surj_at(const SubspaceV& v, const EvalPoint& point, const RankOptions& options) {
  return n_surj_report(v, point, options).n_surj;
}

std::vector<OrderReport> weierstrass_scan(const SubspaceV& v,
                                          const std::vector<EvalPoint>& points,
                                          const RankOptions& options) {
  const int generic = n_inj_at(v, EvalPoint::generic(v.nvars()), options).n_inj;
  std::vector<OrderReport> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(n_inj_at(v, p, options, generic));
  return out;
}

namespace {

Polynomial normalised(const Polynomial& p) {
  return p * (Rational(1) / p.leading_term().second);
}

}  // namespace

std::vector<Polynomial> weierstrass_minors(const SubspaceV& v, const RankOptions& rank_options,
                                           const MinorOptions& options) {
  const int generic = n_inj_at(v, EvalPoint::generic(v.nvars()), rank_options).n_inj;
  const PolynomialMatrix m = symbolic_jet_matrix(v, generic);
  const std::size_t d = m.rows();
  const std::size_t c = m.cols();
  const Integer count = binomial(static_cast<long>(c), static_cast<long>(d));
  if (count > Integer(static_cast<unsigned long>(options.max_minors)))
    throw Error(ErrorCode::DomainError,
                std::to_string(d) + "x" + std::to_string(d) + " minors of a " +
                    std::to_string(d) + "x" + std::to_string(c) + " matrix exceed the limit of " +
                    std::to_string(options.max_minors));

  std::vector<Polynomial> out;
  std::set<std::string> seen;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    PolynomialMatrix sub(d, d, Polynomial(v.nvars()));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) sub(r, k) = m(r, pick[k]);
    Polynomial det = determinant(sub);
    if (!det.is_zero() && seen.insert(normalised(det).to_string()).second)
      out.push_back(std::move(det));

    std::size_t i = d;
    while (i > 0 && pick[i - 1] == c - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace jetorder
