#pragma once

#include "grassfrieze/pluecker.hpp"

namespace grassfrieze {

/// Build a k x n integer matrix whose maximal minors reproduce the given
/// specialization exactly. Requires every value nonzero and the exchange
/// relations to hold; the result is audited against the input before being
/// returned.
///
/// Recursion: for k = 1 the row (p_1, ..., p_n); for k > 1 take the gcd
/// delta of the values through index 1, Bezout-combine them into the row
/// (delta, a_2, ..., a_n), divide the index-1 values by delta to obtain a
/// (k-1, n-1) specialization, and recurse on it for the remaining block.
Matrix realize(const Specialization& s);

}  // namespace grassfrieze
