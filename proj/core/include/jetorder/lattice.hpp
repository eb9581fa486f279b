#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetorder/exponent.hpp"
#include "jetorder/matrix.hpp"

namespace jetorder::lattice {

long gcd(std::span<const long> v);

/// v / gcd(v) together with the gcd; v must be non-zero.
std::pair<IntVector, long> primitive(const IntVector& v);

IntVector subtract(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
long dot(const IntVector& a, const IntVector& b);

/// Exact integer determinant of a square matrix given by its columns.
Integer determinant(const std::vector<IntVector>& columns);

/// Rank over Q of a list of integer vectors.
std::size_t rank(const std::vector<IntVector>& vectors, std::size_t width);

/// Coefficients c with sum_j c_j basis_j = v, when they exist and are
/// integral; basis vectors must be linearly independent.
std::optional<IntVector> coordinates_in(const std::vector<IntVector>& basis,
                                        const IntVector& v);

/// Z-basis of the lattice spanned by the given vectors (Hermite reduction).
std::vector<IntVector> sublattice_basis(const std::vector<IntVector>& vectors,
                                        std::size_t width);

}  // namespace jetorder::lattice
