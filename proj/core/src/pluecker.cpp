#include "grassfrieze/pluecker.hpp"

#include <algorithm>
#include <sstream>

namespace grassfrieze {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

void check_range(int n, const std::vector<int>& idx) {
  for (int i : idx)
    require(i >= 1 && i <= n, Errc::kInputError,
            "index " + std::to_string(i) + " out of range 1.." +
                std::to_string(n));
}

}  // namespace

KSubset::KSubset(int ambient, std::vector<int> idx)
    : n(ambient), indices(std::move(idx)) {
  require(n >= 1, Errc::kInputError, "ambient size must be positive");
  require(!indices.empty() && static_cast<int>(indices.size()) <= n,
          Errc::kInputError, "subset size out of range");
  check_range(n, indices);
  for (std::size_t i = 1; i < indices.size(); ++i)
    require(indices[i - 1] < indices[i], Errc::kInputError,
            "subset indices must be strictly increasing: " + join(indices));
}

IndexWord::IndexWord(int ambient, std::vector<int> w)
    : n(ambient), letters(std::move(w)) {
  require(n >= 1, Errc::kInputError, "ambient size must be positive");
  check_range(n, letters);
}

NormalizedIndex normalize_index(const IndexWord& w) {
  std::vector<int> sorted = w.letters;
  // insertion sort, counting inversions
  long swaps = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    int v = sorted[i];
    std::size_t j = i;
    while (j > 0 && sorted[j - 1] > v) {
      sorted[j] = sorted[j - 1];
      --j;
      ++swaps;
    }
    sorted[j] = v;
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i]) return {0, std::nullopt};
  int sign = (swaps % 2 == 0) ? 1 : -1;
  return {sign, KSubset(w.n, sorted)};
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s)
      cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
  }
  return out;
}

Specialization::Specialization(int n, int k, std::vector<Int> values_lex)
    : n_(n), k_(k), values_(std::move(values_lex)) {
  require(n >= 1 && k >= 1 && k <= n, Errc::kInputError,
          "specialization needs 1 <= k <= n");
  Int expected = binomial(n, k);
  require(Int(static_cast<unsigned long>(values_.size())) == expected,
          Errc::kInputError,
          "specialization needs a value on every k-subset");
}

Specialization Specialization::from_map(
    int n, int k, const std::map<std::vector<int>, Int>& values) {
  require(n >= 1 && k >= 1 && k <= n, Errc::kInputError,
          "specialization needs 1 <= k <= n");
  std::vector<Int> lex;
  for (const auto& subset : all_subsets(n, k)) {
    auto it = values.find(subset);
    require(it != values.end(), Errc::kInputError,
            "missing value at subset {" + join(subset) + "}");
    lex.push_back(it->second);
  }
  require(lex.size() == values.size(), Errc::kInputError,
          "specialization contains an unexpected key");
  return Specialization(n, k, std::move(lex));
}

std::size_t Specialization::rank(const std::vector<int>& subset) const {
  require(static_cast<int>(subset.size()) == k_, Errc::kInputError,
          "subset has wrong size");
  Int r = 0;
  int prev = 0;
  for (int t = 0; t < k_; ++t) {
    int v = subset[static_cast<std::size_t>(t)];
    require(v > prev && v <= n_, Errc::kInputError,
            "bad subset {" + join(subset) + "}");
    for (int w = prev + 1; w < v; ++w) r += binomial(n_ - w, k_ - t - 1);
    prev = v;
  }
  return static_cast<std::size_t>(r.get_ui());
}

const Int& Specialization::at(const std::vector<int>& subset) const {
  return values_[rank(subset)];
}

Specialization pluecker_of_matrix(const Matrix& x) {
  const int k = x.rows();
  const int n = x.cols();
  require(k <= n, Errc::kBadShape,
          "pluecker_of_matrix expects at least as many columns as rows");
  std::vector<Int> values;
  for (const auto& subset : all_subsets(n, k))
    values.push_back(det(x.columns(subset)));
  return Specialization(n, k, std::move(values));
}

Int value_at(const Specialization& s, const IndexWord& w) {
  require(w.n == s.n(), Errc::kInputError, "word over the wrong ambient set");
  require(static_cast<int>(w.letters.size()) == s.k(), Errc::kInputError,
          "word has wrong length");
  NormalizedIndex norm = normalize_index(w);
  if (norm.sign == 0) return 0;
  Int v = s.at(*norm.subset);
  return norm.sign > 0 ? v : Int(-v);
}

Int value_at(const Specialization& s, const std::vector<int>& letters) {
  return value_at(s, IndexWord(s.n(), letters));
}

std::vector<RelationViolation> check_pluecker_relations(
    const Specialization& s) {
  std::vector<RelationViolation> violations;
  const int n = s.n();
  const int k = s.k();
  if (k + 1 > n) return violations;  // no (k+1)-subsets, nothing to check
  const auto i_words = all_subsets(n, k - 1);
  const auto j_words = all_subsets(n, k + 1);
  for (const auto& iw : i_words) {
    for (const auto& jw : j_words) {
      Int sum = 0;
      for (int r = 0; r <= k; ++r) {
        std::vector<int> left = iw;
        left.push_back(jw[static_cast<std::size_t>(r)]);
        Int first = value_at(s, left);
        if (first == 0) continue;
        std::vector<int> right;
        right.reserve(static_cast<std::size_t>(k));
        for (int t = 0; t <= k; ++t)
          if (t != r) right.push_back(jw[static_cast<std::size_t>(t)]);
        Int term = first * s.at(right);
        if (r % 2 == 0)
          sum += term;
        else
          sum -= term;
      }
      if (sum != 0) violations.push_back({iw, jw, sum});
    }
  }
  return violations;
}

MatroidReport support_matroid(const Specialization& s) {
  MatroidReport report;
  report.exchange_ok = true;
  const auto subsets = all_subsets(s.n(), s.k());
  std::vector<const std::vector<int>*> bases;
  for (const auto& subset : subsets) {
    if (s.at(subset) == 0)
      report.zero_subsets.push_back(subset);
    else
      bases.push_back(&subset);
  }
  auto contains = [](const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  for (const auto* b1 : bases) {
    for (const auto* b2 : bases) {
      if (b1 == b2) continue;
      for (int x : *b1) {
        if (contains(*b2, x)) continue;
        bool exchanged = false;
        for (int y : *b2) {
          if (contains(*b1, y)) continue;
          std::vector<int> candidate;
          candidate.reserve(b1->size());
          for (int v : *b1)
            if (v != x) candidate.push_back(v);
          candidate.insert(
              std::upper_bound(candidate.begin(), candidate.end(), y), y);
          if (s.at(candidate) != 0) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          report.exchange_ok = false;
          report.witness_b1 = *b1;
          report.witness_b2 = *b2;
          report.witness_element = x;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace grassfrieze
