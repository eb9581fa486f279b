#include "jetorder/subspace.hpp"

#include <algorithm>
#include <set>

#include "jetorder/error.hpp"
#include "jetorder/matrix.hpp"

namespace jetorder {

namespace {

// Rows: basis elements (plus extras); columns: the union of their supports.
RationalMatrix coefficient_matrix(const std::vector<const Polynomial*>& polys) {
  std::set<Exponent, GradedOrder> support;
  for (const auto* p : polys)
    for (const auto& [e, c] : p->terms()) support.insert(e);
  const std::vector<Exponent> cols(support.begin(), support.end());
  RationalMatrix m(polys.size(), cols.size(), Rational(0));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = polys[r]->coefficient(cols[c]);
  return m;
}

}  // namespace

SubspaceV SubspaceV::from_polynomials(std::size_t nvars, std::vector<Polynomial> basis) {
  if (basis.empty()) throw Error(ErrorCode::EmptyBasis, "subspace needs at least one basis element");
  for (const auto& p : basis)
    if (p.nvars() != nvars)
      throw Error(ErrorCode::DimensionMismatch,
                  "basis polynomial in " + std::to_string(p.nvars()) + " variables, expected " +
                      std::to_string(nvars));

  std::vector<const Polynomial*> ptrs;
  for (const auto& p : basis) ptrs.push_back(&p);
  if (rank_exact(coefficient_matrix(ptrs)) != basis.size())
    throw Error(ErrorCode::DependentBasis, "basis polynomials are linearly dependent");

  SubspaceV v;
  v.nvars_ = nvars;
  const bool monomial = std::all_of(basis.begin(), basis.end(),
                                    [](const Polynomial& p) { return p.is_monomial(); });
  if (monomial) {
    std::vector<Exponent> points;
    for (auto& p : basis) {
      points.push_back(p.terms().begin()->first);
      p = Polynomial::monomial(points.back());
    }
    v.points_ = std::move(points);
  }
  for (const auto& p : basis) v.max_degree_ = std::max(v.max_degree_, p.degree());
  v.basis_ = std::move(basis);
  return v;
}

SubspaceV SubspaceV::from_monomials(std::size_t nvars, std::vector<Exponent> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyBasis, "subspace needs at least one monomial");
  std::set<Exponent> seen;
  for (const auto& e : points) {
    if (e.size() != nvars)
      throw Error(ErrorCode::DimensionMismatch,
                  "exponent " + to_string(e) + " does not have " + std::to_string(nvars) +
                      " entries");
    if (!seen.insert(e).second)
      throw Error(ErrorCode::DuplicateMonomial, "duplicate monomial " + to_string(e));
  }
  SubspaceV v;
  v.nvars_ = nvars;
  for (const auto& e : points) {
    v.basis_.push_back(Polynomial::monomial(e));
    v.max_degree_ = std::max(v.max_degree_, e.degree());
  }
  v.points_ = std::move(points);
  return v;
}

const std::vector<Exponent>& SubspaceV::points() const {
  if (!points_) throw Error(ErrorCode::DomainError, "subspace is not spanned by monomials");
  return *points_;
}

std::optional<std::size_t> SubspaceV::index_of(const Exponent& m) const {
  if (!points_) return std::nullopt;
  const auto it = std::find(points_->begin(), points_->end(), m);
  if (it == points_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_->begin());
}

std::optional<std::vector<Rational>> SubspaceV::coordinates(const Polynomial& p) const {
  if (p.nvars() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "polynomial variable count differs from subspace");
  std::vector<Rational> coords(dim(), Rational(0));
  if (points_) {
    for (const auto& [e, c] : p.terms()) {
      const auto idx = index_of(e);
      if (!idx) return std::nullopt;
      coords[*idx] = c;
    }
    return coords;
  }
  if (p.is_zero()) return coords;

  std::vector<const Polynomial*> ptrs;
  for (const auto& b : basis_) ptrs.push_back(&b);
  ptrs.push_back(&p);
  // Columns of the transpose are the basis and p; a kernel vector with a
  // non-zero last entry expresses p in the basis.
  const auto kernel = nullspace(coefficient_matrix(ptrs).transpose());
  for (const auto& k : kernel) {
    if (k.back() == 0) continue;
    for (std::size_t i = 0; i < dim(); ++i) coords[i] = -k[i] / k.back();
    return coords;
  }
  return std::nullopt;
}

}  // namespace jetorder
