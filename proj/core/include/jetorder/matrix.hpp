#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "jetorder/polynomial.hpp"
#include "jetorder/rational.hpp"

namespace jetorder {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_, T());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;

/// Exact rank. Rows are cleared of denominators and reduced with
/// fraction-free (Bareiss) elimination over Z.
std::size_t rank_exact(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Determinant of a square polynomial matrix by fraction-free elimination.
Polynomial determinant(const PolynomialMatrix& m);

RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point);

enum class RankMethod { Exact, Symbolic, Randomized };
std::string_view to_string(RankMethod method);

struct RankOptions {
  /// Both dimensions at most this size go through symbolic elimination.
  std::size_t symbolic_threshold = 12;
  int random_trials = 4;
  std::uint64_t seed = 0;
};

struct RankResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::Symbolic;
  /// False only for a randomized rank that stayed below min(rows, cols); such
  /// a value is a lower bound.
  bool certified = true;
};

/// Rank over the fraction field Q(x_1, ..., x_n).
RankResult generic_rank(const PolynomialMatrix& m, const RankOptions& options = {});

/// Incremental row-echelon basis over Q; used to grow spans one vector at a
/// time without re-eliminating.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Adds v to the span; returns true when it was independent.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace jetorder
