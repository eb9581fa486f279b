#include "jetorder/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "jetorder/error.hpp"

namespace jetorder::lattice {

long gcd(std::span<const long> v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  return g;
}

std::pair<IntVector, long> primitive(const IntVector& v) {
  const long g = gcd(v);
  if (g == 0) throw Error(ErrorCode::Internal, "primitive vector of zero");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return {out, g};
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "lattice vector length");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "lattice vector length");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

long dot(const IntVector& a, const IntVector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer determinant(const std::vector<IntVector>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n) throw Error(ErrorCode::DimensionMismatch, "non-square determinant");
    for (std::size_t r = 0; r < n; ++r) a[r][c] = Rational(columns[c][r]);
  }
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det.get_num();
}

std::size_t rank(const std::vector<IntVector>& vectors, std::size_t width) {
  RationalMatrix m(vectors.size(), width, Rational(0));
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(r, c) = Rational(vectors[r][c]);
  return rank_exact(m);
}

std::optional<IntVector> coordinates_in(const std::vector<IntVector>& basis, const IntVector& v) {
  const std::size_t k = basis.size();
  const std::size_t width = v.size();
  // Columns: basis vectors then v; a kernel vector with non-zero last entry
  // gives the coordinates.
  RationalMatrix m(width, k + 1, Rational(0));
  for (std::size_t r = 0; r < width; ++r) {
    for (std::size_t c = 0; c < k; ++c) m(r, c) = Rational(basis[c][r]);
    m(r, k) = Rational(v[r]);
  }
  for (const auto& kv : nullspace(m)) {
    if (kv.back() == 0) continue;
    IntVector out(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Rational q = -kv[i] / kv.back();
      if (q.get_den() != 1) return std::nullopt;
      out[i] = q.get_num().get_si();
    }
    return out;
  }
  return std::nullopt;
}

std::vector<IntVector> sublattice_basis(const std::vector<IntVector>& vectors, std::size_t width) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != width) throw Error(ErrorCode::DimensionMismatch, "lattice vector length");
    rows.push_back(v);
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < width && top < rows.size(); ++c) {
    // Euclid on column c among rows top.. until a single non-zero entry is left.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || std::labs(rows[r][c]) < std::labs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const long q = rows[r][c] / rows[top][c];
        for (std::size_t j = 0; j < width; ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

}  // namespace jetorder::lattice
