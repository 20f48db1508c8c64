#pragma once

#include "grassfrieze/matrix.hpp"

namespace grassfrieze {

/// Exact signed determinant, fraction-free (Bareiss exact-division
/// elimination). Throws kNotSquare on non-square input.
Int det(const Matrix& a);

/// Column Hermite normal form of a square nonsingular matrix:
///   a * u == h,  det(u) = +-1,
///   h lower-triangular, h(i,i) > 0, 0 <= h(i,j) < h(i,i) for i > j.
struct HnfResult {
  Matrix h;
  Matrix u;
};

HnfResult column_hnf(const Matrix& a);

/// Nonnegative generator of the ideal of all r x r minors of a k x r matrix,
/// r <= k. For r = 1 this is the gcd of the column's entries; for r = k the
/// absolute determinant.
Int volume(const Matrix& a);

}  // namespace grassfrieze
