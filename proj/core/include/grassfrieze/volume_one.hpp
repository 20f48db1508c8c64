#pragma once

#include <optional>

#include "grassfrieze/pluecker.hpp"

namespace grassfrieze {

struct Cond1Failure {
  int index;  // 1-based column label whose through-index gcd exceeds epsilon
};

struct Cond2Failure {
  Int q;                     // failing prime
  std::vector<int> witness;  // subset S of pairwise inequivalent labels,
                             // |S| = |P(F_q)^k|
};

struct VolumeOneVerdict {
  bool exists = false;
  Int epsilon;
  std::vector<PrimePower> prime_factors;
  std::optional<Cond1Failure> cond1_failure;
  std::optional<Cond2Failure> cond2_failure;
};

/// Nonnegative gcd of all values. Requires every value nonzero.
Int epsilon_of(const Specialization& s);

struct Cond1Result {
  bool ok;
  std::optional<Cond1Failure> failure;
};

/// For every index i, the gcd of the values through i must equal epsilon.
Cond1Result check_condition1(const Specialization& s);

struct Cond2Result {
  bool ok;
  std::optional<Cond2Failure> failure;
};

/// For each prime q | epsilon, count the classes of the relation
///   i ~ j  iff  nu_q(p_{w,i,j}) != nu_q(epsilon) for every (k-2)-word w
///               disjoint from {i, j}
/// (an equivalence on consistent input; kNonTransitiveRelation otherwise).
/// The condition holds for q iff the class count is strictly below
/// |P(F_q)^k|.
Cond2Result check_condition2(const Specialization& s);

/// Decide whether a representation with all column gcds equal to 1 exists.
/// Requires nonzero values and consistent relations (caller-checked).
VolumeOneVerdict decide_volume_one(const Specialization& s);

/// Build a representation all of whose columns are primitive. Requires
/// decide_volume_one(s).exists.
Matrix construct_volume_one(const Specialization& s);

struct ReducedRow {
  Matrix matrix;
  int sign;  // parity of the row permutation applied; -1 flips all minors
};

/// Row-operate x (all columns primitive, q dividing every maximal minor)
/// so that the first row becomes divisible by q, keeping columns primitive.
ReducedRow reduce_prime_row(const Matrix& x, const Int& q);

struct NBoundResult {
  bool holds;
  bool applicable;  // false when the q-valuations are not all equal
};

/// When all values share one q-valuation, C(n, k-1) <= |P(F_q)^k| must hold
/// for any consistent specialization; returns whether it does.
NBoundResult check_n_bound(const Specialization& s, const Int& q);

}  // namespace grassfrieze
