#include "grassfrieze/frieze.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace grassfrieze {

namespace {

int reduce_label(int i, int n) {  // into 1..n
  int r = (i - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    return false;
  bool c_in = a.first < b.first && b.first < a.second;
  bool d_in = a.first < b.second && b.second < a.second;
  return c_in != d_in;
}

bool adjacent_on_cycle(int i, int j, int n) {  // i < j
  return j - i == 1 || (i == 1 && j == n);
}

}  // namespace

Triangulation::Triangulation(int polygon_size,
                             std::vector<std::pair<int, int>> diags)
    : n(polygon_size), diagonals(std::move(diags)) {
  require(n >= 3, Errc::kInvalidTriangulation, "polygon needs at least 3 vertices");
  std::set<std::pair<int, int>> seen;
  for (auto& d : diagonals) {
    if (d.first > d.second) std::swap(d.first, d.second);
    require(d.first >= 1 && d.second <= n && d.first < d.second,
            Errc::kInvalidTriangulation,
            "diagonal endpoints out of range");
    require(!adjacent_on_cycle(d.first, d.second, n),
            Errc::kInvalidTriangulation,
            "polygon edge listed as a diagonal");
    require(seen.insert(d).second, Errc::kInvalidTriangulation,
            "repeated diagonal");
  }
  for (std::size_t a = 0; a < diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < diagonals.size(); ++b)
      require(!chords_cross(diagonals[a], diagonals[b]),
              Errc::kInvalidTriangulation, "crossing diagonals");
  require(static_cast<int>(diagonals.size()) == n - 3,
          Errc::kInvalidTriangulation,
          "a triangulation of an n-gon has exactly n-3 diagonals");
}

Specialization cc_frieze(const Triangulation& t) {
  const int n = t.n;
  std::set<std::pair<int, int>> chords(t.diagonals.begin(), t.diagonals.end());
  for (int i = 1; i < n; ++i) chords.insert({i, i + 1});
  chords.insert({1, n});

  // In a maximal non-crossing family, a vertex triple bounds a face exactly
  // when all three connecting chords are present.
  std::vector<std::array<int, 3>> faces;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!chords.count({i, j})) continue;
      for (int l = j + 1; l <= n; ++l)
        if (chords.count({j, l}) && chords.count({i, l}))
          faces.push_back({i, j, l});
    }
  require(static_cast<int>(faces.size()) == n - 2, Errc::kInvalidTriangulation,
          "face count mismatch");

  // Assign a lattice vector to every vertex so that det(w_i, w_j) = 1 on
  // each chord; all pair determinants are then the frieze values.
  std::vector<std::optional<std::array<Int, 2>>> w(
      static_cast<std::size_t>(n + 1));
  auto solve_third = [&](int u, int v, int m) {
    const auto& wu = *w[static_cast<std::size_t>(u)];
    const auto& wv = *w[static_cast<std::size_t>(v)];
    Int su = u < m ? 1 : -1;
    Int sv = v < m ? 1 : -1;
    Int delta = wu[0] * wv[1] - wu[1] * wv[0];
    require(delta == 1 || delta == -1, Errc::kInternalPostconditionFailure,
            "chord determinant not a unit during propagation");
    Int m1 = (su * wv[0] - wu[0] * sv) / delta;
    Int m2 = (su * wv[1] - wu[1] * sv) / delta;
    w[static_cast<std::size_t>(m)] = {m1, m2};
  };
  w[static_cast<std::size_t>(faces[0][0])] = {Int(1), Int(0)};
  w[static_cast<std::size_t>(faces[0][1])] = {Int(0), Int(1)};
  solve_third(faces[0][0], faces[0][1], faces[0][2]);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& f : faces) {
      int known = 0, unknown = -1;
      for (int v : f) {
        if (w[static_cast<std::size_t>(v)])
          ++known;
        else
          unknown = v;
      }
      if (known == 2) {
        std::array<int, 2> pair{};
        int idx = 0;
        for (int v : f)
          if (v != unknown) pair[static_cast<std::size_t>(idx++)] = v;
        solve_third(pair[0], pair[1], unknown);
        progress = true;
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    require(w[static_cast<std::size_t>(v)].has_value(),
            Errc::kInternalPostconditionFailure,
            "propagation did not reach every vertex");

  std::vector<Int> values;
  for (const auto& subset : all_subsets(n, 2)) {
    const auto& wi = *w[static_cast<std::size_t>(subset[0])];
    const auto& wj = *w[static_cast<std::size_t>(subset[1])];
    Int value = wi[0] * wj[1] - wi[1] * wj[0];
    require(value > 0, Errc::kInternalPostconditionFailure,
            "nonpositive frieze value");
    values.push_back(std::move(value));
  }
  Specialization s(n, 2, std::move(values));
  for (const auto& chord : chords)
    require(s.at({chord.first, chord.second}) == 1,
            Errc::kInternalPostconditionFailure, "chord value drifted from 1");
  return s;
}

Specialization restrict_to(const Specialization& s,
                           const std::vector<int>& vertices) {
  require(static_cast<int>(vertices.size()) >= s.k(), Errc::kSubsetTooSmall,
          "restriction needs at least k vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] >= 1 && vertices[i] <= s.n(), Errc::kInputError,
            "vertex out of range");
    require(i == 0 || vertices[i - 1] < vertices[i], Errc::kInputError,
            "vertices must be strictly increasing");
  }
  const int m = static_cast<int>(vertices.size());
  std::vector<Int> values;
  for (const auto& subset : all_subsets(m, s.k())) {
    std::vector<int> mapped;
    mapped.reserve(subset.size());
    for (int v : subset) mapped.push_back(vertices[static_cast<std::size_t>(v - 1)]);
    values.push_back(s.at(mapped));
  }
  return Specialization(m, s.k(), std::move(values));
}

bool triangle_admissible(const Int& a, const Int& b, const Int& c) {
  require(a > 0 && b > 0 && c > 0, Errc::kNonPositive,
          "triangle labels must be positive");
  XgcdResult ab = xgcd(a, b), bc = xgcd(b, c), ac = xgcd(a, c);
  if (ab.g != bc.g || bc.g != ac.g) return false;
  auto two_val = [](const Int& v) {
    return valuation(v, 2).finite_value();
  };
  unsigned long va = two_val(a), vb = two_val(b), vc = two_val(c);
  if (va == 0 && vb == 0 && vc == 0) return true;
  return !(va == vb && vb == vc);
}

SubpolygonResult subpolygon_admissible(const Specialization& s) {
  require(s.k() == 2, Errc::kInputError, "subpolygon test is for k = 2");
  for (const Int& v : s.values())
    require(v > 0, Errc::kNonPositive, "values must be positive");
  const int n = s.n();
  SubpolygonResult result{true, {}};
  for (const auto& triple : all_subsets(n, 3)) {
    Int pab = s.at({triple[0], triple[1]});
    Int pac = s.at({triple[0], triple[2]});
    Int pbc = s.at({triple[1], triple[2]});
    if (!triangle_admissible(pab, pac, pbc)) {
      // distinguish which of the two conditions broke
      XgcdResult g1 = xgcd(pab, pac), g2 = xgcd(pac, pbc), g3 = xgcd(pab, pbc);
      result.admissible = false;
      if (g1.g != g2.g || g2.g != g3.g) {
        result.witness.triangle = triple;
        return result;
      }
      result.witness.prime = 2;
      result.witness.subset = triple;
      return result;
    }
  }
  for (int p = 2; p < n; ++p) {
    if (!is_prime(p)) continue;
    Int prime = p;
    for (const auto& subset : all_subsets(n, p + 1)) {
      bool all_divisible = true;
      bool all_same = true;
      std::optional<unsigned long> shared;
      for (std::size_t a = 0; a < subset.size() && (all_divisible && all_same);
           ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
          unsigned long v =
              valuation(s.at({subset[a], subset[b]}), prime).finite_value();
          if (v == 0) all_divisible = false;
          if (shared && v != *shared) all_same = false;
          if (!shared) shared = v;
          if (!all_divisible || !all_same) break;
        }
      if (all_divisible && all_same) {
        result.admissible = false;
        result.witness.prime = prime;
        result.witness.subset = subset;
        return result;
      }
    }
  }
  return result;
}

bool is_slk_frieze(const Specialization& s) {
  for (const Int& v : s.values())
    if (v <= 0) return false;
  const int n = s.n();
  const int k = s.k();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> window;
    window.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) window.push_back(reduce_label(i + t, n));
    std::sort(window.begin(), window.end());
    if (s.at(window) != 1) return false;
  }
  return true;
}

std::vector<std::vector<Int>> alpha_normals(const Matrix& window) {
  const int k = window.rows();
  require(k >= 2, Errc::kBadShape, "alpha_normals needs k >= 2");
  require(window.cols() == 2 * k - 2, Errc::kBadShape,
          "window must have 2k-2 columns");
  std::vector<std::vector<Int>> alphas;
  for (int j = 0; j < k; ++j) {
    std::vector<Int> alpha(static_cast<std::size_t>(k));
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      Matrix minor(k - 1, k - 1);
      int rr = 0;
      for (int r = 0; r < k; ++r) {
        if (r == i) continue;
        for (int c = 0; c < k - 1; ++c) minor.at(rr, c) = window.at(r, j + c);
        ++rr;
      }
      Int d = det(minor);
      // cofactor of the y column sitting at position k-j within
      // (x_j .. x_{k-1} y x_k .. x_{j+k-2})
      if ((i + k - j + 1) % 2 != 0) d = -d;
      if (d != 0) nonzero = true;
      alpha[static_cast<std::size_t>(i)] = std::move(d);
    }
    require(nonzero, Errc::kRankDeficientWindow,
            "window columns " + std::to_string(j + 1) + ".." +
                std::to_string(j + k - 1) + " are rank deficient");
    alphas.push_back(std::move(alpha));
  }
  return alphas;
}

namespace {

Int det_of_columns(const std::vector<std::vector<Int>>& cols,
                   const std::vector<int>& picks) {
  const int k = static_cast<int>(cols[0].size());
  Matrix m(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r)
      m.at(r, c) = cols[static_cast<std::size_t>(picks[static_cast<std::size_t>(c)])]
                       [static_cast<std::size_t>(r)];
  return det(m);
}

// Frozen value at cyclic start i: determinant of the k consecutive columns
// taken in sorted position order.
Int frozen_value(const std::vector<std::vector<Int>>& cols, int k, int start) {
  const int l = static_cast<int>(cols.size());
  std::vector<int> picks;
  picks.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) picks.push_back((start + t) % l);
  std::sort(picks.begin(), picks.end());
  return det_of_columns(cols, picks);
}

Int window_volume(const std::vector<std::vector<Int>>& cols, int k, int start) {
  const int l = static_cast<int>(cols.size());
  Matrix m(k, k - 1);
  for (int t = 0; t < k - 1; ++t) {
    const auto& col = cols[static_cast<std::size_t>((start + t) % l)];
    for (int r = 0; r < k; ++r) m.at(r, t) = col[static_cast<std::size_t>(r)];
  }
  return volume(m);
}

Int column_gcd(const std::vector<Int>& col) {
  Int g = 0;
  for (const Int& v : col) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

void check_all_minors_positive(const std::vector<std::vector<Int>>& cols,
                               int k, Errc code) {
  const int l = static_cast<int>(cols.size());
  for (const auto& subset : all_subsets(l, k)) {
    std::vector<int> picks;
    picks.reserve(subset.size());
    for (int v : subset) picks.push_back(v - 1);
    require(det_of_columns(cols, picks) > 0, code,
            "an increasing k-minor is not positive");
  }
}

// Linear functional y -> frozen value (sorted-position convention) of the
// window starting at new-position s once y is inserted after gap g. On
// interior gaps this reproduces alpha_normals; on windows that wrap past
// position 0 the sorted convention twists the sign, which evaluating the
// determinant against unit vectors picks up automatically.
std::vector<Int> created_normal(const std::vector<std::vector<Int>>& cols,
                                int k, int g, int s_new) {
  const int l = static_cast<int>(cols.size());
  const int total = l + 1;
  const int y_pos = g + 1;
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) positions.push_back((s_new + t) % total);
  std::sort(positions.begin(), positions.end());
  std::vector<Int> normal(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Matrix m(k, k);
    for (int c = 0; c < k; ++c) {
      int pos = positions[static_cast<std::size_t>(c)];
      if (pos == y_pos) {
        m.at(i, c) = 1;  // unit vector e_i
      } else {
        const auto& col = cols[static_cast<std::size_t>(pos <= g ? pos : pos - 1)];
        for (int r = 0; r < k; ++r) m.at(r, c) = col[static_cast<std::size_t>(r)];
      }
    }
    normal[static_cast<std::size_t>(i)] = det(m);
  }
  return normal;
}

}  // namespace

ExtensionTrace extend_to_slk(const Matrix& x) {
  const int k = x.rows();
  const int n = x.cols();
  require(n >= k, Errc::kPreconditionViolated,
          "need at least k columns");
  std::vector<std::vector<Int>> cols;
  for (int j = 0; j < n; ++j) {
    cols.push_back(x.column(j));
    require(column_gcd(cols.back()) == 1, Errc::kPreconditionViolated,
            "column " + std::to_string(j + 1) + " is not primitive");
  }
  if (k >= 2) check_all_minors_positive(cols, k, Errc::kPreconditionViolated);

  ExtensionTrace trace;
  std::vector<int> origin(cols.size());
  std::iota(origin.begin(), origin.end(), 0);

  if (k == 1) {
    // Primitive positive 1-vectors are already all (1); nothing to insert.
    for (const auto& c : cols)
      require(c[0] == 1, Errc::kPreconditionViolated,
              "k = 1 requires every entry to be 1");
  }

  auto product_d = [&]() {
    Int d = 1;
    for (std::size_t i = 0; i < cols.size(); ++i)
      d *= frozen_value(cols, k, static_cast<int>(i));
    return d;
  };
  auto product_e = [&]() {
    Int e = 1;
    if (k < 3) return e;
    for (std::size_t i = 0; i < cols.size(); ++i)
      e *= window_volume(cols, k, static_cast<int>(i));
    return e;
  };

  Int d = product_d();
  Int e = product_e();

  // One Hermite insertion at the cyclic gap after position g. direct_stage
  // selects the careful z_2 = a_21 choice the all-unit-content case needs;
  // the normalizing stage takes the canonical representative everywhere.
  auto solve_insertion = [&](int g, bool direct_stage) -> std::vector<Int> {
    const int l = static_cast<int>(cols.size());
    const int y_pos = g + 1;
    std::vector<std::vector<Int>> normals;
    std::vector<Int> contents(static_cast<std::size_t>(k));
    Matrix normalized(k, k);
    for (int j = 1; j <= k; ++j) {
      int s_new = ((y_pos - k + j) % (l + 1) + (l + 1)) % (l + 1);
      auto normal = created_normal(cols, k, g, s_new);
      Int content = column_gcd(normal);
      require(content > 0, Errc::kRankDeficientWindow,
              "rank-deficient column window next to the insertion gap");
      require(!direct_stage || content == 1,
              Errc::kInternalPostconditionFailure,
              "imprimitive normal although all window volumes are 1");
      for (int i = 0; i < k; ++i) {
        Int q;
        mpz_divexact(q.get_mpz_t(),
                     normal[static_cast<std::size_t>(i)].get_mpz_t(),
                     content.get_mpz_t());
        normalized.at(j - 1, i) = q;
      }
      contents[static_cast<std::size_t>(j - 1)] = std::move(content);
      normals.push_back(std::move(normal));
    }

    HnfResult hnf = column_hnf(normalized);
    require(hnf.h.at(0, 0) == 1, Errc::kInternalPostconditionFailure,
            "normalized first row should have unit content");

    // Solve H y' = z top-down with every z_i in (0, a_ii]; in the direct
    // stage force y'_2 = 0, landing z_2 = a_21 strictly below a_22.
    std::vector<Int> yprime(static_cast<std::size_t>(k));
    std::vector<Int> z(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      Int c = 0;
      for (int j = 0; j < i; ++j)
        c += hnf.h.at(i, j) * yprime[static_cast<std::size_t>(j)];
      const Int& aii = hnf.h.at(i, i);
      if (direct_stage && i == 1) {
        require(c > 0 && c < aii, Errc::kInternalPostconditionFailure,
                "reduced subdiagonal entry not strictly inside (0, a_22)");
        yprime[static_cast<std::size_t>(i)] = 0;
        z[static_cast<std::size_t>(i)] = c;
        continue;
      }
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), Int(c - 1).get_mpz_t(), aii.get_mpz_t());
      z[static_cast<std::size_t>(i)] = c - aii * q;
      yprime[static_cast<std::size_t>(i)] = -q;
    }
    std::vector<Int> y(static_cast<std::size_t>(k), Int(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        y[static_cast<std::size_t>(i)] +=
            hnf.u.at(i, j) * yprime[static_cast<std::size_t>(j)];

    for (int j = 0; j < k; ++j) {
      Int dot = 0;
      for (int i = 0; i < k; ++i)
        dot += normals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
               y[static_cast<std::size_t>(i)];
      require(dot == contents[static_cast<std::size_t>(j)] *
                         z[static_cast<std::size_t>(j)],
              Errc::kInternalPostconditionFailure,
              "inserted minor disagrees with the Hermite solution");
    }
    require(column_gcd(y) == 1, Errc::kInternalPostconditionFailure,
            "inserted column is not primitive");
    return y;
  };

  auto measure_after = [&](int g, const std::vector<Int>& y) {
    std::vector<std::vector<Int>> next = cols;
    next.insert(next.begin() + g + 1, y);
    Int dn = 1, en = 1;
    for (std::size_t i = 0; i < next.size(); ++i)
      dn *= frozen_value(next, k, static_cast<int>(i));
    if (k >= 3)
      for (std::size_t i = 0; i < next.size(); ++i)
        en *= window_volume(next, k, static_cast<int>(i));
    return std::pair<Int, Int>(dn, en);
  };

  while (k >= 2 && d > 1) {
    const int l = static_cast<int>(cols.size());

    // Stage 1: while some k-1 consecutive columns share a factor, split such
    // a group; its volume is what blocks the all-unit-content argument.
    // Candidate gaps are the group's interior gaps; take the first one that
    // makes lexicographic (D, E) progress.
    int gap = -1;
    std::vector<Int> y;
    if (k >= 3) {
      for (int m = 0; m < l && gap < 0; ++m) {
        if (window_volume(cols, k, m) <= 1) continue;
        for (int off = 0; off <= k - 3 && gap < 0; ++off) {
          int g = (m + off) % l;
          std::vector<Int> candidate = solve_insertion(g, false);
          auto [dn, en] = measure_after(g, candidate);
          if (dn < d || (dn == d && en < e)) {
            gap = g;
            y = std::move(candidate);
          }
        }
      }
      require(e == 1 || gap >= 0, Errc::kNonTermination,
              "no splitting insertion makes (D, E) progress");
    }

    // Stage 2: all (k-1)-window volumes are 1; target the first frozen
    // value above 1. The Hermite diagonal then matches the frozen values
    // being replaced and z_2 = a_21 < a_22 decreases D strictly.
    if (gap < 0) {
      int f = -1;
      for (int i = 0; i < l; ++i) {
        if (frozen_value(cols, k, i) > 1) {
          f = i;
          break;
        }
      }
      require(f >= 0, Errc::kInternalPostconditionFailure,
              "D > 1 but every frozen value is 1");
      gap = (f + k - 2) % l;
      y = solve_insertion(gap, true);
    }

    ExtensionStep step;
    step.insert_after = gap + 1;
    step.vector = y;
    step.d_before = d;
    cols.insert(cols.begin() + gap + 1, y);
    origin.insert(origin.begin() + gap + 1, -1);

    check_all_minors_positive(cols, k, Errc::kInternalPostconditionFailure);
    Int d_new = product_d();
    Int e_new = product_e();
    bool progress = d_new < d || (d_new == d && e_new < e);
    require(progress, Errc::kNonTermination,
            "insertion made no progress in (D, E)");
    step.d_after = d_new;
    trace.steps.push_back(std::move(step));
    d = d_new;
    e = e_new;
  }

  trace.final.k = k;
  trace.final.columns = cols;
  for (std::size_t i = 0; i < origin.size(); ++i)
    if (origin[i] >= 0) trace.embedding.push_back(static_cast<int>(i) + 1);
  require(static_cast<int>(trace.embedding.size()) == n,
          Errc::kInternalPostconditionFailure, "embedding lost a column");
  return trace;
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  require(n >= 3, Errc::kInputError, "polygon needs at least 3 vertices");
  require(n <= 12, Errc::kResourceLimit,
          "triangulation enumeration is guarded at n <= 12");
  // Triangulations of the fan i..j with base chord (i, j), as diagonal sets.
  std::vector<std::vector<std::pair<int, int>>> out;
  auto rec = [&](auto&& self, int i, int j)
      -> std::vector<std::vector<std::pair<int, int>>> {
    std::vector<std::vector<std::pair<int, int>>> acc;
    if (j - i < 2) {
      acc.push_back({});
      return acc;
    }
    for (int m = i + 1; m < j; ++m) {
      auto left = self(self, i, m);
      auto right = self(self, m, j);
      for (const auto& a : left)
        for (const auto& b : right) {
          std::vector<std::pair<int, int>> diags = a;
          diags.insert(diags.end(), b.begin(), b.end());
          if (m - i >= 2) diags.push_back({i, m});
          if (j - m >= 2) diags.push_back({m, j});
          acc.push_back(std::move(diags));
        }
    }
    return acc;
  };
  std::vector<Triangulation> result;
  for (auto& diags : rec(rec, 1, n)) result.emplace_back(n, std::move(diags));
  return result;
}

std::vector<std::vector<Int>> frieze_table(const Specialization& s) {
  const int n = s.n();
  const int k = s.k();
  std::vector<std::vector<Int>> table(
      static_cast<std::size_t>(n),
      std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int i = 1; i <= n; ++i) {
    for (int m = 1; m <= n; ++m) {
      std::vector<int> word;
      word.reserve(static_cast<std::size_t>(k));
      for (int t = 0; t <= k - 2; ++t) word.push_back(reduce_label(i + t, n));
      word.push_back(m);
      std::vector<int> sorted = word;
      std::sort(sorted.begin(), sorted.end());
      bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) !=
                     sorted.end();
      if (!repeats)
        table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] =
            s.at(sorted);
    }
  }
  return table;
}

}  // namespace grassfrieze
