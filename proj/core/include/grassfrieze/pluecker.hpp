#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grassfrieze/exactlin.hpp"
#include "grassfrieze/matrix.hpp"

namespace grassfrieze {

/// Strictly increasing k-subset of {1..n}.
struct KSubset {
  int n;
  std::vector<int> indices;

  KSubset(int ambient, std::vector<int> idx);
  int k() const { return static_cast<int>(indices.size()); }
  friend auto operator<=>(const KSubset&, const KSubset&) = default;
};

/// Index sequence over {1..n}; repetitions and arbitrary order allowed.
struct IndexWord {
  int n;
  std::vector<int> letters;

  IndexWord(int ambient, std::vector<int> w);
};

struct NormalizedIndex {
  int sign;  // -1, 0, +1; 0 iff the word repeats a letter
  std::optional<KSubset> subset;
};

/// Sort the word; sign is the sorting permutation's sign, 0 on repeats.
NormalizedIndex normalize_index(const IndexWord& w);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> all_subsets(int n, int k);

/// Integer values on every k-subset of {1..n}: the integral points of the
/// Grassmannian coordinate ring that this library manipulates. Values are
/// stored only on sorted subsets; signed access goes through value_at.
class Specialization {
 public:
  Specialization(int n, int k, std::vector<Int> values_lex);

  static Specialization from_map(int n, int k,
                                 const std::map<std::vector<int>, Int>& values);

  int n() const { return n_; }
  int k() const { return k_; }

  const Int& at(const std::vector<int>& subset) const;
  const Int& at(const KSubset& subset) const { return at(subset.indices); }

  /// Lexicographic rank of a sorted subset; the storage order.
  std::size_t rank(const std::vector<int>& subset) const;

  const std::vector<Int>& values() const { return values_; }

  friend bool operator==(const Specialization&, const Specialization&) = default;

 private:
  int n_;
  int k_;
  std::vector<Int> values_;
};

/// Specialization induced by a k x n matrix: value at {i_1 < ... < i_k} is
/// the determinant of those columns.
Specialization pluecker_of_matrix(const Matrix& x);

/// Signed value at an arbitrary word: sgn(sort) * stored value, 0 on repeats.
Int value_at(const Specialization& s, const IndexWord& w);
Int value_at(const Specialization& s, const std::vector<int>& letters);

struct RelationViolation {
  std::vector<int> i_word;  // k-1 indices
  std::vector<int> j_word;  // k+1 indices
  Int value;                // the nonzero alternating sum
};

/// Evaluate the quadratic exchange relations over canonical index choices
/// ((k-1)-subsets against (k+1)-subsets); empty result iff consistent.
std::vector<RelationViolation> check_pluecker_relations(const Specialization& s);

struct MatroidReport {
  std::vector<std::vector<int>> zero_subsets;
  bool exchange_ok;
  // witness of a failed exchange: bases b1, b2 and the element of b1 \ b2
  // that admits no replacement
  std::optional<std::vector<int>> witness_b1;
  std::optional<std::vector<int>> witness_b2;
  std::optional<int> witness_element;
};

/// Zero set of the specialization plus a basis-exchange audit of the
/// complementary (nonzero) family.
MatroidReport support_matroid(const Specialization& s);

}  // namespace grassfrieze
