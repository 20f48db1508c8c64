#include "grassfrieze/exactlin.hpp"

#include <algorithm>

namespace grassfrieze {

Int det(const Matrix& a) {
  require(a.rows() == a.cols(), Errc::kNotSquare,
          "determinant of a non-square matrix");
  const int n = a.rows();
  Matrix m = a;
  int sign = 1;
  Int prev = 1;
  for (int step = 0; step + 1 < n; ++step) {
    int pivot = -1;
    for (int i = step; i < n; ++i) {
      if (m.at(i, step) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != step) {
      for (int j = step; j < n; ++j) std::swap(m.at(step, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = step + 1; i < n; ++i) {
      for (int j = step + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(step, step) - m.at(i, step) * m.at(step, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, step) = 0;
    }
    prev = m.at(step, step);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// h := h with col_dst += q * col_src, mirrored on u.
void add_column(Matrix& h, Matrix& u, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < h.rows(); ++i) h.at(i, dst) += q * h.at(i, src);
  for (int i = 0; i < u.rows(); ++i) u.at(i, dst) += q * u.at(i, src);
}

void swap_columns(Matrix& h, Matrix& u, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < h.rows(); ++i) std::swap(h.at(i, a), h.at(i, b));
  for (int i = 0; i < u.rows(); ++i) std::swap(u.at(i, a), u.at(i, b));
}

void negate_column(Matrix& h, Matrix& u, int j) {
  for (int i = 0; i < h.rows(); ++i) h.at(i, j) = -h.at(i, j);
  for (int i = 0; i < u.rows(); ++i) u.at(i, j) = -u.at(i, j);
}

// Unimodular 2x2 combination turning row entry (i, b) into 0 and (i, a)
// into gcd of the two entries.
void combine_columns(Matrix& h, Matrix& u, int i, int a, int b) {
  const Int x = h.at(i, a);
  const Int y = h.at(i, b);
  XgcdResult e = xgcd(x, y);
  Int xg, yg;
  mpz_divexact(xg.get_mpz_t(), x.get_mpz_t(), e.g.get_mpz_t());
  mpz_divexact(yg.get_mpz_t(), y.get_mpz_t(), e.g.get_mpz_t());
  for (int r = 0; r < h.rows(); ++r) {
    Int ca = h.at(r, a), cb = h.at(r, b);
    h.at(r, a) = e.u * ca + e.v * cb;
    h.at(r, b) = xg * cb - yg * ca;
  }
  for (int r = 0; r < u.rows(); ++r) {
    Int ca = u.at(r, a), cb = u.at(r, b);
    u.at(r, a) = e.u * ca + e.v * cb;
    u.at(r, b) = xg * cb - yg * ca;
  }
}

}  // namespace

HnfResult column_hnf(const Matrix& a) {
  require(a.rows() == a.cols(), Errc::kNotSquare,
          "column_hnf expects a square matrix");
  const int n = a.rows();
  Matrix h = a;
  Matrix u = Matrix::identity(n);
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int j = i; j < n; ++j) {
      if (h.at(i, j) != 0) {
        pivot = j;
        break;
      }
    }
    require(pivot >= 0, Errc::kSingularMatrix,
            "column_hnf requires a nonsingular matrix");
    swap_columns(h, u, i, pivot);
    for (int j = i + 1; j < n; ++j) {
      if (h.at(i, j) != 0) combine_columns(h, u, i, i, j);
    }
    if (h.at(i, i) < 0) negate_column(h, u, i);
    // Reduce the entries left of the diagonal into [0, h(i,i)).
    for (int j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(),
                 h.at(i, i).get_mpz_t());
      add_column(h, u, j, i, Int(-q));
    }
  }
  return {h, u};
}

Int volume(const Matrix& a) {
  const int k = a.rows();
  const int r = a.cols();
  require(r <= k, Errc::kBadShape, "volume expects at most as many columns as rows");
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int t = 0; t < r; ++t) pick[static_cast<std::size_t>(t)] = t;
  Int g = 0;
  while (true) {
    Matrix minor(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        minor.at(i, j) = a.at(pick[static_cast<std::size_t>(i)], j);
    Int d = det(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) break;
    // next r-combination of rows
    int t = r - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == k - r + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < r; ++s)
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
  }
  return g;
}

}  // namespace grassfrieze
