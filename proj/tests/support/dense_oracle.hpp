#pragma once

#include <vector>

#include "jetorder/matrix.hpp"
#include "jetorder/subspace.hpp"

namespace jetorder::testkit {

struct DenseImage {
  std::size_t unknowns = 0;
  std::size_t solution_dim = 0;
  std::vector<RationalMatrix> matrices;
  std::size_t rank = 0;
};

/// Image in End(V) of all order <= n operators preserving a monomial V,
/// solved directly over every term x^b d^a with |a| <= n and b in the box
/// [0, max(P) - min(P) + n]. No weight grading is used.
DenseImage dense_evaluation_image(const SubspaceV& v, int order);

/// True when the two families of matrices span the same space.
bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b);

}  // namespace jetorder::testkit
