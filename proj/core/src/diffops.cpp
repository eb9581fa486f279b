#include "jetorder/diffops.hpp"

#include <algorithm>
#include <set>

#include "jetorder/error.hpp"

namespace jetorder {

namespace {

std::set<Exponent> point_set(const std::vector<Exponent>& points) {
  return std::set<Exponent>(points.begin(), points.end());
}

}  // namespace

WeightSpace preserving_weight_space(const std::vector<Exponent>& points, const IntVector& weight,
                                    int order) {
  if (order < 0) throw Error(ErrorCode::DomainError, "operator order must be non-negative");
  const std::size_t nvars = weight.size();
  for (const auto& m : points)
    if (m.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "weight length differs from points");

  WeightSpace ws;
  ws.weight = weight;
  ws.order = order;
  for (const auto& a : exponents_up_to(nvars, order))
    if (shift(a, weight)) ws.terms.push_back(a);

  const auto in_p = point_set(points);
  std::vector<const Exponent*> escaping;
  for (const auto& m : points) {
    const auto target = shift(m, weight);
    // A negative target is only reachable by terms with (m)_a = 0.
    if (target && !in_p.contains(*target)) escaping.push_back(&m);
  }

  ws.constraints = RationalMatrix(escaping.size(), ws.terms.size(), Rational(0));
  for (std::size_t r = 0; r < escaping.size(); ++r)
    for (std::size_t c = 0; c < ws.terms.size(); ++c)
      ws.constraints(r, c) = Rational(falling_factorial(*escaping[r], ws.terms[c]));

  if (ws.terms.empty()) return ws;

  for (const auto& v : nullspace(ws.constraints)) {
    DifferentialOperator op(nvars);
    for (std::size_t c = 0; c < ws.terms.size(); ++c)
      if (v[c] != 0) op.add_term({*shift(ws.terms[c], weight), ws.terms[c]}, v[c]);
    ws.basis.push_back(std::move(op));
  }

  RationalMatrix all(points.size(), ws.terms.size(), Rational(0));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < ws.terms.size(); ++c)
      all(r, c) = Rational(falling_factorial(points[r], ws.terms[c]));
  ws.annihilator_dim = ws.terms.size() - rank_exact(all);
  return ws;
}

std::size_t annihilator_weight_dim(const std::vector<Exponent>& points, const IntVector& weight,
                                   int order) {
  return preserving_weight_space(points, weight, order).annihilator_dim;
}

std::vector<IntVector> difference_weights(const std::vector<Exponent>& points) {
  std::set<IntVector> out;
  for (const auto& p : points) {
    for (const auto& q : points) {
      IntVector w(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) w[i] = p[i] - q[i];
      out.insert(std::move(w));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<RationalMatrix> action_matrix(const DifferentialOperator& op, const SubspaceV& v) {
  const std::size_t d = v.dim();
  RationalMatrix m(d, d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    const auto coords = v.coordinates(apply(op, v.basis()[j]));
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) m(i, j) = (*coords)[i];
  }
  return m;
}

EndImage evaluation_image(const SubspaceV& v, int order) {
  const auto& points = v.points();
  EndImage image;
  image.dim_v = v.dim();
  EchelonBasis span(image.dim_v * image.dim_v);
  for (const auto& w : difference_weights(points)) {
    const WeightSpace ws = preserving_weight_space(points, w, order);
    for (const auto& op : ws.basis) {
      // Weight-w operators send x^m to a multiple of x^(m+w).
      RationalMatrix m(image.dim_v, image.dim_v, Rational(0));
      for (std::size_t j = 0; j < points.size(); ++j) {
        const auto target = shift(points[j], w);
        if (!target) continue;
        const auto i = v.index_of(*target);
        if (!i) continue;
        Rational c = 0;
        for (const auto& [t, coef] : op.terms())
          c += coef * Rational(falling_factorial(points[j], t.d_part));
        m(*i, j) = c;
      }
      std::vector<Rational> flat;
      flat.reserve(image.dim_v * image.dim_v);
      for (std::size_t r = 0; r < image.dim_v; ++r)
        for (std::size_t c = 0; c < image.dim_v; ++c) flat.push_back(m(r, c));
      span.insert(std::move(flat));
      image.matrices.push_back(std::move(m));
    }
  }
  image.rank = span.rank();
  return image;
}

bool check_irreducible(const SubspaceV& v, int order) {
  return evaluation_image(v, order).rank == v.dim() * v.dim();
}

std::vector<DifferentialOperator> sl_generators(int nvars, int m) {
  if (nvars < 1) throw Error(ErrorCode::DomainError, "sl generators need at least one variable");
  const auto n = static_cast<std::size_t>(nvars);
  std::vector<DifferentialOperator> out;
  for (std::size_t l = 0; l < n; ++l) out.push_back(DifferentialOperator::partial(n, l));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      out.push_back(DifferentialOperator::term(Exponent::unit(n, k), Exponent::unit(n, l)));
  for (std::size_t k = 0; k < n; ++k) {
    DifferentialOperator op = DifferentialOperator::term(Exponent::unit(n, k), Exponent(n), m);
    for (std::size_t i = 0; i < n; ++i)
      op.add_term({Exponent::unit(n, i) + Exponent::unit(n, k), Exponent::unit(n, i)}, -1);
    out.push_back(std::move(op));
  }
  return out;
}

std::vector<DifferentialOperator> hirzebruch_generators(int r, int k, int l) {
  if (r < 1) throw Error(ErrorCode::DomainError, "Hirzebruch generators need r >= 1");
  if (k - l * r < 0)
    throw Error(ErrorCode::DomainError,
                "Hirzebruch generators need k - l r >= 0, got k=" + std::to_string(k) +
                    " l=" + std::to_string(l) + " r=" + std::to_string(r));
  using Op = DifferentialOperator;
  const Op dx = Op::partial(2, 0);
  const Op dy = Op::partial(2, 1);
  const Op x = Op::term({1, 0}, {0, 0});
  const Op y = Op::term({0, 1}, {0, 0});
  const Op pi = compose(x, dx) + Rational(r) * compose(y, dy) - Op::scalar(2, k);
  const Op nabla_y = compose(y, dy) - Op::scalar(2, l);

  std::vector<Op> out;
  out.push_back(dx);
  for (int j = 0; j <= r; ++j) out.push_back(Op::term({j, 0}, {0, 1}));
  out.push_back(compose(x, pi));
  for (int j = 0; j <= r; ++j) {
    Op prod = Op::term({0, 0}, {j, 0});
    prod = compose(prod, y);
    prod = compose(prod, nabla_y);
    for (int t = 0; t < r - j; ++t) prod = compose(prod, pi + Op::scalar(2, t));
    out.push_back(std::move(prod));
  }
  out.push_back(Op::term({1, 0}, {1, 0}));
  out.push_back(Op::term({0, 1}, {0, 1}));
  return out;
}

std::vector<PreserveResult> preserve_check(const std::vector<DifferentialOperator>& ops,
                                           const SubspaceV& v) {
  std::vector<PreserveResult> out;
  for (const auto& op : ops) {
    if (op.nvars() != v.nvars())
      throw Error(ErrorCode::DimensionMismatch, "operator and subspace variable counts differ");
    PreserveResult res;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (!v.contains(apply(op, v.basis()[j]))) {
        res.preserved = false;
        res.violator = j;
        break;
      }
    }
    out.push_back(res);
  }
  return out;
}

}  // namespace jetorder
