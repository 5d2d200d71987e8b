#pragma once

// Dense exact linear algebra for the tiny systems (d <= 4) the geometry needs.

#include <optional>
#include <vector>

#include "multideal/rational.hpp"

namespace multideal {

using RationalMatrix = std::vector<RationalVector>;

std::size_t rank(RationalMatrix rows);

Rational determinant(RationalMatrix m);

/// Unique solution of A x = b for square A, or nullopt when A is singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// For (d-1) rows in dimension d, the vector of signed maximal minors: it is
/// orthogonal to every row and nonzero iff the rows are independent.
RationalVector orthogonal_complement(const RationalMatrix& rows, std::size_t dimension);

/// Scales a nonzero rational vector to the primitive integer vector with the same direction.
IntegerVector primitive_integer(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntegerVector& a, const RationalVector& b);

}  // namespace multideal
