#include "dense_oracle.hpp"

#include <map>

#include "jetorder/diffop.hpp"

namespace jetorder::testkit {

namespace {

using SparseRow = std::map<std::size_t, Rational>;

/// Reduced row echelon form kept sparse; fill-in stays local to the
/// coupled unknowns.
class SparseEchelon {
 public:
  void insert(SparseRow row) {
    for (const auto& [pivot, prow] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational f = it->second;
      for (const auto& [c, v] : prow) {
        Rational& x = row[c];
        x -= f * v;
        if (x == 0) row.erase(c);
      }
    }
    if (row.empty()) return;
    const std::size_t pivot = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    for (auto& [p, prow] : rows_) {
      auto it = prow.find(pivot);
      if (it == prow.end()) continue;
      const Rational f = it->second;
      for (const auto& [c, v] : row) {
        Rational& x = prow[c];
        x -= f * v;
        if (x == 0) prow.erase(c);
      }
    }
    rows_.emplace(pivot, std::move(row));
  }

  /// One kernel vector per free column.
  std::vector<SparseRow> kernel(std::size_t width) const {
    std::vector<SparseRow> out;
    for (std::size_t f = 0; f < width; ++f) {
      if (rows_.count(f)) continue;
      SparseRow k{{f, Rational(1)}};
      for (const auto& [p, prow] : rows_) {
        auto it = prow.find(f);
        if (it != prow.end()) k[p] = -it->second;
      }
      out.push_back(std::move(k));
    }
    return out;
  }

 private:
  std::map<std::size_t, SparseRow> rows_;
};

std::vector<Exponent> box(std::size_t nvars, const std::vector<int>& hi) {
  std::vector<Exponent> out;
  std::vector<int> e(nvars, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == hi[i]) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

}  // namespace

DenseImage dense_evaluation_image(const SubspaceV& v, int order) {
  const std::size_t n = v.nvars();
  const auto& pts = v.points();
  std::vector<int> hi(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int lo = pts[0][i], top = pts[0][i];
    for (const auto& p : pts) {
      lo = std::min(lo, p[i]);
      top = std::max(top, p[i]);
    }
    hi[i] = top - lo + order;
  }
  std::vector<OpTerm> unknowns;
  for (const auto& b : box(n, hi))
    for (const auto& a : exponents_up_to(n, order)) unknowns.push_back({b, a});

  // Image coefficient of x^e in op(x^m), collected per (m, e) pair.
  std::map<std::pair<std::size_t, Exponent>, SparseRow> rows;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [b, a] = unknowns[u];
    for (std::size_t mi = 0; mi < pts.size(); ++mi) {
      if (!a.divides(pts[mi])) continue;
      const Integer ff = falling_factorial(pts[mi], a);
      if (ff == 0) continue;
      const Exponent e = pts[mi] - a + b;
      if (v.index_of(e)) continue;
      rows[{mi, e}][u] = Rational(ff);
    }
  }
  SparseEchelon ech;
  for (auto& [key, row] : rows) ech.insert(std::move(row));
  const auto kernel = ech.kernel(unknowns.size());

  DenseImage out;
  out.unknowns = unknowns.size();
  out.solution_dim = kernel.size();
  EchelonBasis span(v.dim() * v.dim());
  for (const auto& k : kernel) {
    DifferentialOperator op(n);
    for (const auto& [u, c] : k) op.add_term(unknowns[u], c);
    RationalMatrix m(v.dim(), v.dim(), Rational(0));
    for (std::size_t j = 0; j < v.dim(); ++j) {
      const Polynomial image = apply(op, v.basis()[j]);
      for (const auto& [e, c] : image.terms()) m(*v.index_of(e), j) = c;
    }
    if (span.insert(flatten(m))) out.matrices.push_back(std::move(m));
  }
  out.rank = span.rank();
  return out;
}

bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b) {
  if (a.empty() && b.empty()) return true;
  const std::size_t width = flatten(a.empty() ? b[0] : a[0]).size();
  EchelonBasis ea(width), eb(width), both(width);
  for (const auto& m : a) {
    ea.insert(flatten(m));
    both.insert(flatten(m));
  }
  for (const auto& m : b) {
    eb.insert(flatten(m));
    both.insert(flatten(m));
  }
  return ea.rank() == eb.rank() && eb.rank() == both.rank();
}

}  // namespace jetorder::testkit
