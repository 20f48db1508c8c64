#include "grassfrieze/realize.hpp"

#include <sstream>

namespace grassfrieze {

namespace {

Matrix realize_rec(const Specialization& s) {
  const int n = s.n();
  const int k = s.k();
  if (k == 1) {
    Matrix row(1, n);
    for (int j = 1; j <= n; ++j) row.at(0, j - 1) = s.at({j});
    return row;
  }

  // Values through index 1, ordered by the lexicographic tail subsets.
  const auto tails = all_subsets(n, k - 1);
  std::vector<std::vector<int>> tails_past_one;
  std::vector<Int> through_one;
  for (const auto& tail : tails) {
    if (tail.front() == 1) continue;
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(k));
    subset.push_back(1);
    subset.insert(subset.end(), tail.begin(), tail.end());
    through_one.push_back(s.at(subset));
    tails_past_one.push_back(tail);
  }
  GcdBezout fold = gcd_many_bezout(through_one);
  const Int& delta = fold.g;
  require(delta > 0, Errc::kInternalPostconditionFailure,
          "gcd of nonzero values vanished");

  Matrix out(k, n);
  for (int j = 1; j <= n; ++j) {
    Int a = 0;
    for (std::size_t t = 0; t < tails_past_one.size(); ++t) {
      if (fold.coefficients[t] == 0) continue;
      std::vector<int> word;
      word.reserve(static_cast<std::size_t>(k));
      word.push_back(j);
      word.insert(word.end(), tails_past_one[t].begin(),
                  tails_past_one[t].end());
      a += fold.coefficients[t] * value_at(s, word);
    }
    out.at(0, j - 1) = a;
  }
  require(out.at(0, 0) == delta, Errc::kInternalPostconditionFailure,
          "Bezout fold did not reproduce the gcd");

  // Sub-specialization on (k-1, n-1): shift labels down by one and divide
  // the index-1 values by delta (exact by the choice of delta).
  std::vector<Int> sub_values;
  for (const auto& tail : all_subsets(n - 1, k - 1)) {
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(k));
    subset.push_back(1);
    for (int v : tail) subset.push_back(v + 1);
    Int q;
    mpz_divexact(q.get_mpz_t(), s.at(subset).get_mpz_t(), delta.get_mpz_t());
    sub_values.push_back(q);
  }
  Matrix sub = realize_rec(Specialization(n - 1, k - 1, std::move(sub_values)));

  for (int i = 1; i < k; ++i)
    for (int j = 1; j < n; ++j) out.at(i, j) = sub.at(i - 1, j - 1);
  return out;
}

}  // namespace

Matrix realize(const Specialization& s) {
  for (const Int& v : s.values())
    require(v != 0, Errc::kZeroValue,
            "realize requires every value to be nonzero");
  auto violations = check_pluecker_relations(s);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "exchange relation violated at i-word {";
    for (std::size_t t = 0; t < violations[0].i_word.size(); ++t)
      msg << (t ? "," : "") << violations[0].i_word[t];
    msg << "} j-word {";
    for (std::size_t t = 0; t < violations[0].j_word.size(); ++t)
      msg << (t ? "," : "") << violations[0].j_word[t];
    msg << "}: sum = " << violations[0].value.get_str();
    fail(Errc::kInconsistentSpecialization, msg.str());
  }
  Matrix out = realize_rec(s);
  require(pluecker_of_matrix(out) == s, Errc::kInternalPostconditionFailure,
          "realized matrix fails the minor round trip");
  return out;
}

}  // namespace grassfrieze
