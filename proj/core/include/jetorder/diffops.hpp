#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetorder/diffop.hpp"
#include "jetorder/matrix.hpp"
#include "jetorder/subspace.hpp"

namespace jetorder {

/// Weight-w slice of the order <= n operators preserving a monomial space.
///
/// A weight-w operator sum_a c_a x^(a+w) d^a sends x^m to
/// (sum_a c_a (m)_a) x^(m+w); preservation asks that this scalar vanish for
/// every m in P with m + w outside P.
struct WeightSpace {
  IntVector weight;
  int order = 0;
  /// Differential parts a with |a| <= order and a + w >= 0.
  std::vector<Exponent> terms;
  /// Rows are the constraints m with m + w outside P.
  RationalMatrix constraints;
  std::vector<DifferentialOperator> basis;
  /// Dimension of the subspace acting by zero on V.
  std::size_t annihilator_dim = 0;

  std::size_t dim() const { return basis.size(); }
};

WeightSpace preserving_weight_space(const std::vector<Exponent>& points,
                                    const IntVector& weight, int order);

std::size_t annihilator_weight_dim(const std::vector<Exponent>& points,
                                   const IntVector& weight, int order);

/// Image of the order <= n preserving operators in End(V).
struct EndImage {
  std::size_t dim_v = 0;
  /// Action of each preserving basis operator on the ordered basis of V.
  std::vector<RationalMatrix> matrices;
  std::size_t rank = 0;
};

/// All differences p - q for p, q in P, sorted.
std::vector<IntVector> difference_weights(const std::vector<Exponent>& points);

/// Span over all weights in P - P. Requires a monomial V.
EndImage evaluation_image(const SubspaceV& v, int order);

/// True when the order <= n preserving operators act as all of End(V).
bool check_irreducible(const SubspaceV& v, int order);

/// Matrix of op on the ordered basis of V (column j is the image of basis j),
/// or nullopt when some image leaves V.
std::optional<RationalMatrix> action_matrix(const DifferentialOperator& op,
                                            const SubspaceV& v);

/// d_l, x_k d_l and -sum_i x_i x_k d_i + m x_k for k, l = 1..n.
std::vector<DifferentialOperator> sl_generators(int nvars, int m);

/// Generators of the operators preserving the Hirzebruch space V^r_{kl}:
/// d_x, x^j d_y, x pi, d_x^j y nabla_y pi (pi + 1) ... (pi + r - j - 1),
/// x d_x, y d_y with pi = x d_x + r y d_y - k and nabla_y = y d_y - l.
std::vector<DifferentialOperator> hirzebruch_generators(int r, int k, int l);

struct PreserveResult {
  bool preserved = true;
  /// Index of the first basis element sent outside V.
  std::optional<std::size_t> violator;
};

std::vector<PreserveResult> preserve_check(const std::vector<DifferentialOperator>& ops,
                                           const SubspaceV& v);

}  // namespace jetorder
