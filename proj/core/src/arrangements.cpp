#include "grassfrieze/arrangements.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grassfrieze {

namespace {

// Chords {a,b} and {c,d} cross iff exactly one of c, d lies strictly
// between a and b on the cycle.
bool cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (a == c || a == d || b == c || b == d) return false;
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

}  // namespace

NonCrossingResult check_non_crossing(
    const std::vector<std::vector<int>>& subsets, int n) {
  for (const auto& s : subsets)
    for (int v : s)
      require(v >= 1 && v <= n, Errc::kInputError, "subset label out of range");
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<int> only_a, only_b;
      for (int v : subsets[a])
        if (std::find(subsets[b].begin(), subsets[b].end(), v) ==
            subsets[b].end())
          only_a.push_back(v);
      for (int v : subsets[b])
        if (std::find(subsets[a].begin(), subsets[a].end(), v) ==
            subsets[a].end())
          only_b.push_back(v);
      for (std::size_t i = 0; i < only_a.size(); ++i)
        for (std::size_t j = i + 1; j < only_a.size(); ++j)
          for (std::size_t s = 0; s < only_b.size(); ++s)
            for (std::size_t t = s + 1; t < only_b.size(); ++t)
              if (cross(only_a[i], only_a[j], only_b[s], only_b[t]))
                return {false, std::make_pair(subsets[a], subsets[b])};
    }
  }
  return {true, std::nullopt};
}

ClusterVerification verify_cluster_values(const Matrix& x,
                                          const ClusterAssignment& c) {
  require(x.rows() == c.k && x.cols() == c.n, Errc::kShapeMismatch,
          "matrix shape does not match the cluster assignment");
  ClusterVerification out{true, {}};
  for (const auto& [subset, expected] : c.items) {
    KSubset checked(c.n, subset);  // validates range/sortedness
    require(checked.k() == c.k, Errc::kShapeMismatch,
            "cluster subset has the wrong size");
    Int actual = det(x.columns(subset));
    if (actual != expected) {
      out.ok = false;
      out.mismatches.push_back({subset, expected, actual});
    }
  }
  for (int i = 1; i <= c.n; ++i) {
    std::vector<int> window;
    for (int t = 0; t < c.k; ++t) {
      int label = (i - 1 + t) % c.n + 1;
      window.push_back(label);
    }
    std::sort(window.begin(), window.end());
    Int actual = det(x.columns(window));
    if (actual != 1) {
      out.ok = false;
      out.mismatches.push_back({window, Int(1), actual});
    }
  }
  return out;
}

LineSet line_set(const Matrix& x) {
  std::set<std::vector<Int>> seen;
  for (int j = 0; j < x.cols(); ++j) {
    std::vector<Int> col = x.column(j);
    Int g = 0;
    for (const Int& v : col) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    require(g != 0, Errc::kZeroColumn,
            "column " + std::to_string(j + 1) + " is zero");
    for (Int& v : col) {
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      v = std::move(q);
    }
    for (const Int& v : col) {
      if (v == 0) continue;
      if (v < 0)
        for (Int& w : col) w = -w;
      break;
    }
    seen.insert(std::move(col));
  }
  LineSet out;
  out.normals.assign(seen.begin(), seen.end());
  return out;
}

const std::vector<std::vector<Int>>& positive_roots(RootSystem system) {
  static const std::vector<std::vector<Int>> a3 = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  static const std::vector<std::vector<Int>> b3 = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
      {1, 1, 1}, {0, 1, 2}, {1, 1, 2}, {1, 2, 2}};
  return system == RootSystem::kA3 ? a3 : b3;
}

bool compare_positive_roots(const Matrix& x, RootSystem system) {
  require(x.rows() == 3, Errc::kUnknownSystem,
          "root comparison supports rank-3 systems");
  const auto& roots = positive_roots(system);
  std::multiset<std::vector<Int>> expected(roots.begin(), roots.end());
  for (int j = 0; j < x.cols(); ++j) {
    std::vector<Int> col = x.column(j);
    auto it = expected.find(col);
    if (it == expected.end()) {
      for (Int& v : col) v = -v;
      it = expected.find(col);
    }
    if (it == expected.end()) return false;
    expected.erase(it);
  }
  return expected.empty();
}

std::optional<RootSystem> parse_root_system(const std::string& name) {
  if (name == "A3" || name == "a3") return RootSystem::kA3;
  if (name == "B3" || name == "b3") return RootSystem::kB3;
  return std::nullopt;
}

}  // namespace grassfrieze
