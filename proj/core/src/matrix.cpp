#include "jetorder/matrix.hpp"

#include <algorithm>
#include <random>

#include "jetorder/error.hpp"

namespace jetorder {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows clear_denominators(const RationalMatrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& d = m(r, c).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      rows[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return rows;
}

// Fraction-free echelon reduction. Every entry below the current pivot row is
// a minor of the input, so each division by the previous pivot is exact.
std::size_t bareiss_rank(IntRows a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      if (pivot == rows || abs(a[r][c]) < abs(a[pivot][c])) pivot = r;
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[i][j] * p - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

bool simpler(const Polynomial& a, const Polynomial& b) {
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  return a.degree() < b.degree();
}

std::size_t bareiss_rank(PolynomialMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  std::optional<Polynomial> prev;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a(r, c).is_zero()) continue;
      if (pivot == rows || simpler(a(r, c), a(pivot, c))) pivot = r;
    }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    const Polynomial p = a(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Polynomial lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial v = a(i, j) * p;
        if (!lead.is_zero() && !a(rank, j).is_zero()) v -= lead * a(rank, j);
        a(i, j) = prev ? v.divide_exact(*prev) : std::move(v);
      }
      a(i, c) = Polynomial(p.nvars());
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(clear_denominators(m), m.cols());
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial determinant(const PolynomialMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::size_t nvars = 0;
  for (std::size_t r = 0; r < n && nvars == 0; ++r)
    for (std::size_t c = 0; c < n; ++c) nvars = std::max(nvars, m(r, c).nvars());
  if (n == 0) return Polynomial::constant(nvars, 1);

  PolynomialMatrix a = m;
  bool negate = false;
  std::optional<Polynomial> prev;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      if (pivot == n || simpler(a(r, k), a(pivot, k))) pivot = r;
    }
    if (pivot == n) return Polynomial(nvars);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      negate = !negate;
    }
    const Polynomial p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = a(i, j) * p;
        if (!lead.is_zero() && !a(k, j).is_zero()) v -= lead * a(k, j);
        a(i, j) = prev ? v.divide_exact(*prev) : std::move(v);
      }
      a(i, k) = Polynomial(nvars);
    }
    prev = p;
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = m(r, c).evaluate(point);
  return out;
}

std::string_view to_string(RankMethod method) {
  switch (method) {
    case RankMethod::Exact: return "exact";
    case RankMethod::Symbolic: return "symbolic";
    case RankMethod::Randomized: return "randomized";
  }
  return "unknown";
}

RankResult generic_rank(const PolynomialMatrix& m, const RankOptions& options) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return {0, RankMethod::Symbolic, true};
  if (m.rows() <= options.symbolic_threshold && m.cols() <= options.symbolic_threshold)
    return {bareiss_rank(m), RankMethod::Symbolic, true};

  std::size_t nvars = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) nvars = std::max(nvars, m(r, c).nvars());

  std::mt19937_64 rng(options.seed);
  RankResult result{0, RankMethod::Randomized, false};
  long long range = 1000;
  for (int trial = 0; trial < std::max(1, options.random_trials); ++trial) {
    std::uniform_int_distribution<long long> coord(-range, range);
    std::vector<Rational> point(nvars);
    for (auto& x : point) x = Rational(static_cast<long>(coord(rng)));
    result.rank = std::max(result.rank, rank_exact(evaluate(m, point)));
    if (result.rank == full) {
      result.certified = true;
      break;
    }
    if (range < 1'000'000'000'000LL) range *= 1000;
  }
  return result;
}

void EchelonBasis::reduce(std::vector<Rational>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < width_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool EchelonBasis::insert(std::vector<Rational> v) {
  if (v.size() != width_) throw Error(ErrorCode::DimensionMismatch, "echelon vector width");
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < width_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<Rational> v) const {
  if (v.size() != width_) throw Error(ErrorCode::DimensionMismatch, "echelon vector width");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace jetorder
