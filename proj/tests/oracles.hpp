#pragma once

// Test-only oracles, kept independent of the library code paths they audit.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassfrieze/frieze.hpp"
#include "grassfrieze/matrix.hpp"
#include "grassfrieze/pluecker.hpp"

namespace oracles {

inline void oracle_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("oracle invariant failed: ") + what);
}

using grassfrieze::Int;
using grassfrieze::Matrix;

// Cofactor (Laplace) expansion along the first row.
inline Int det_cofactor(const Matrix& a) {
  const int n = a.rows();
  if (n == 1) return a.at(0, 0);
  Int sum = 0;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = a.at(r, c);
      }
    }
    Int term = a.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// gcd of the explicit list of all r x r minors, via the cofactor oracle.
inline Int volume_by_minor_list(const Matrix& a) {
  const int k = a.rows();
  const int r = a.cols();
  Int g = 0;
  for (const auto& rows : grassfrieze::all_subsets(k, r)) {
    Matrix minor(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) minor.at(i, j) = a.at(rows[i] - 1, j);
    Int d = det_cofactor(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g;
}

// Unit frieze generated by pure quadrilateral-exchange propagation: chords
// of the triangulation get 1, then p_ik * p_jl = p_ij * p_kl + p_il * p_jk
// fills the rest. The scan order is steered by `order` to probe confluence.
inline grassfrieze::Specialization ptolemy_frieze(
    const grassfrieze::Triangulation& t, int order) {
  const int n = t.n;
  std::map<std::pair<int, int>, Int> known;
  for (int i = 1; i < n; ++i) known[{i, i + 1}] = 1;
  known[{1, n}] = 1;
  for (auto d : t.diagonals) known[{d.first, d.second}] = 1;

  auto quads = grassfrieze::all_subsets(n, 4);
  if (order % 2 == 1) std::reverse(quads.begin(), quads.end());
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& q : quads) {
      int i = q[0], j = q[1], k = q[2], l = q[3];
      auto have = [&](int a, int b) { return known.count({a, b}) != 0; };
      if (have(i, j) && have(j, k) && have(k, l) && have(i, l)) {
        if (have(i, k) && !have(j, l)) {
          Int num = known[{i, j}] * known[{k, l}] + known[{i, l}] * known[{j, k}];
          Int out;
          mpz_divexact(out.get_mpz_t(), num.get_mpz_t(),
                       known[{i, k}].get_mpz_t());
          known[{j, l}] = out;
          progress = true;
        } else if (have(j, l) && !have(i, k)) {
          Int num = known[{i, j}] * known[{k, l}] + known[{i, l}] * known[{j, k}];
          Int out;
          mpz_divexact(out.get_mpz_t(), num.get_mpz_t(),
                       known[{j, l}].get_mpz_t());
          known[{i, k}] = out;
          progress = true;
        }
      }
    }
  }
  std::vector<Int> values;
  for (const auto& subset : grassfrieze::all_subsets(n, 2)) {
    auto it = known.find({subset[0], subset[1]});
    oracle_check(it != known.end(), "propagation reached every pair");
    values.push_back(it->second);
  }
  return grassfrieze::Specialization(n, 2, std::move(values));
}

inline Int det2(const std::vector<Int>& u, const std::vector<Int>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

// Minimal k = 2 insertion path between primitive u and v with det(u,v) > 0:
// the unique sequence u, y_1, .., y_m, v of consecutive unimodular
// determinants, built from continued-fraction (Euclidean) steps.
inline std::vector<std::vector<Int>> sail_path(const std::vector<Int>& u,
                                               const std::vector<Int>& v) {
  Int d = det2(u, v);
  oracle_check(d > 0, "sail needs det(u,v) > 0");
  if (d == 1) return {};
  grassfrieze::XgcdResult e = grassfrieze::xgcd(u[0], u[1]);
  oracle_check(e.g == 1, "sail needs a primitive start column");
  std::vector<Int> y0{-e.v, e.u};  // det(u, y0) = 1
  Int r = grassfrieze::mod_floor(det2(y0, v), d);
  oracle_check(r != 0, "r = 0 would force y parallel to v");
  Int q;
  mpz_divexact(q.get_mpz_t(), Int(r - det2(y0, v)).get_mpz_t(), d.get_mpz_t());
  std::vector<Int> y{y0[0] + q * u[0], y0[1] + q * u[1]};
  oracle_check(det2(u, y) == 1, "sail step left determinant");
  oracle_check(det2(y, v) == r, "sail step right determinant");
  std::vector<std::vector<Int>> rest = sail_path(y, v);
  rest.insert(rest.begin(), y);
  return rest;
}

// Random integer matrix with entries in [-bound, bound].
inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols,
                            int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

inline bool all_maximal_minors_nonzero(const Matrix& m) {
  for (const auto& subset :
       grassfrieze::all_subsets(m.cols(), m.rows()))
    if (grassfrieze::det(m.columns(subset)) == 0) return false;
  return true;
}

}  // namespace oracles
