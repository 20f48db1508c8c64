#pragma once

#include <optional>
#include <utility>

#include "grassfrieze/pluecker.hpp"

namespace grassfrieze {

/// Maximal set of pairwise non-crossing diagonals of a convex n-gon.
struct Triangulation {
  int n;
  std::vector<std::pair<int, int>> diagonals;  // i < j, non-adjacent

  Triangulation(int polygon_size, std::vector<std::pair<int, int>> diags);
};

/// The k = 2 specialization generated by assigning 1 to every edge and
/// every diagonal of the triangulation; all remaining pair values follow
/// from the quadratic exchange (Ptolemy) recurrence and are positive.
Specialization cc_frieze(const Triangulation& t);

/// Relabel the values on an increasing vertex subset through the
/// order-preserving bijection onto {1..|S|}.
Specialization restrict_to(const Specialization& s,
                           const std::vector<int>& vertices);

/// Whether (a,b,c) occurs as the labels of a triangle in some unit frieze:
/// equal pairwise gcds, and the 2-valuations either all zero or not all
/// equal.
bool triangle_admissible(const Int& a, const Int& b, const Int& c);

struct SubpolygonWitness {
  // condition 1 witness: a vertex triple with unequal pairwise gcds
  std::optional<std::vector<int>> triangle;
  // condition 2 witness: a prime and a (p+1)-subset whose values all share
  // a positive p-valuation
  std::optional<Int> prime;
  std::optional<std::vector<int>> subset;
};

struct SubpolygonResult {
  bool admissible;
  SubpolygonWitness witness;
};

/// Whether a positive k = 2 specialization occurs as a vertex restriction
/// of some unit frieze.
SubpolygonResult subpolygon_admissible(const Specialization& s);

/// True iff all values are positive and every cyclically consecutive
/// window [i, .., i+k-1] (indices reduced mod n, then sorted) has value 1.
bool is_slk_frieze(const Specialization& s);

/// Wall normals of the insertion cone for a window of 2k-2 consecutive
/// columns: alpha_j is orthogonal to columns j..j+k-2 and signed so that
///   (alpha_j, y) = det(x_j .. x_{k-1}  y  x_k .. x_{j+k-2}).
/// det of the stacked alpha rows is +- the product of the k-1 frozen
/// values the insertion replaces.
std::vector<std::vector<Int>> alpha_normals(const Matrix& window);

struct ExtensionStep {
  int insert_after;  // 1-based position in the sequence before this step
  std::vector<Int> vector;
  Int d_before;
  Int d_after;
};

struct FriezeSequence {
  int k;
  std::vector<std::vector<Int>> columns;
};

struct ExtensionTrace {
  FriezeSequence final;
  std::vector<ExtensionStep> steps;
  std::vector<int> embedding;  // 1-based positions of the input columns
};

/// Insert integer columns into the cyclic sequence until every consecutive
/// window determinant (frozen value) equals 1, keeping every increasing
/// k-minor positive and the input columns embedded in order. Requires
/// primitive columns and strictly positive increasing minors.
ExtensionTrace extend_to_slk(const Matrix& x);

/// All triangulations of the n-gon (Catalan(n-2) of them); n <= 12.
std::vector<Triangulation> enumerate_triangulations(int n);

/// Display helper: the classical frieze-table layout, entry (i, m) showing
/// the value on the window word (i, i+1, .., i+k-2, m) reduced mod n, or 0
/// when the word repeats an index. Carries no correctness weight.
std::vector<std::vector<Int>> frieze_table(const Specialization& s);

}  // namespace grassfrieze
