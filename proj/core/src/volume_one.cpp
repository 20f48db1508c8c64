#include "grassfrieze/volume_one.hpp"

#include <algorithm>
#include <set>

#include "grassfrieze/realize.hpp"

namespace grassfrieze {

namespace {

void require_nonzero(const Specialization& s) {
  for (const Int& v : s.values())
    require(v != 0, Errc::kZeroValue, "operation requires nonzero values");
}

unsigned long finite_valuation(const Int& a, const Int& q) {
  Int rest = abs(a);
  unsigned long m = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
    ++m;
  }
  return m;
}

// i ~ j iff every (k-2)-subset w of {1..n} \ {i,j} has
// nu_q(p at w+{i,j}) != nu_q(epsilon).
bool equivalent_mod_prime(const Specialization& s, const Int& q,
                          unsigned long eps_val, int i, int j) {
  const int n = s.n();
  const int k = s.k();
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n - 2));
  for (int v = 1; v <= n; ++v)
    if (v != i && v != j) rest.push_back(v);
  for (const auto& pick : all_subsets(n - 2, k - 2)) {
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(k));
    for (int t : pick) subset.push_back(rest[static_cast<std::size_t>(t - 1)]);
    subset.push_back(i);
    subset.push_back(j);
    std::sort(subset.begin(), subset.end());
    if (finite_valuation(s.at(subset), q) == eps_val) return false;
  }
  return true;
}

struct PrimeClasses {
  std::vector<std::vector<int>> classes;  // 1-based labels, each sorted
};

PrimeClasses classes_mod_prime(const Specialization& s, const Int& q,
                               unsigned long eps_val) {
  const int n = s.n();
  std::vector<std::vector<bool>> eq(
      static_cast<std::size_t>(n + 1),
      std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool e = equivalent_mod_prime(s, q, eps_val, i, j);
      eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
      eq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || !eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        continue;
      for (int l = 1; l <= n; ++l) {
        if (l == i || l == j) continue;
        if (eq[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] &&
            !eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])
          fail(Errc::kNonTransitiveRelation,
               "prime " + int_to_string(q) + ": labels " + std::to_string(i) +
                   "," + std::to_string(j) + "," + std::to_string(l) +
                   " break transitivity (inconsistent values)");
      }
    }
  PrimeClasses out;
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cls{i};
    seen[static_cast<std::size_t>(i)] = true;
    for (int j = i + 1; j <= n; ++j) {
      if (eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        cls.push_back(j);
        seen[static_cast<std::size_t>(j)] = true;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

Int epsilon_of(const Specialization& s) {
  require_nonzero(s);
  return gcd_many(s.values());
}

Cond1Result check_condition1(const Specialization& s) {
  require_nonzero(s);
  Int eps = gcd_many(s.values());
  for (int i = 1; i <= s.n(); ++i) {
    std::vector<Int> through;
    for (const auto& subset : all_subsets(s.n(), s.k())) {
      if (std::binary_search(subset.begin(), subset.end(), i))
        through.push_back(s.at(subset));
    }
    if (gcd_many(through) != eps) return {false, Cond1Failure{i}};
  }
  return {true, std::nullopt};
}

Cond2Result check_condition2(const Specialization& s) {
  require_nonzero(s);
  Int eps = gcd_many(s.values());
  auto factors = factorize(eps);
  if (s.k() == 1) {
    // The pair relation is vacuous; a single primitive entry forces eps = 1.
    if (!factors.empty()) return {false, Cond2Failure{factors[0].q, {1}}};
    return {true, std::nullopt};
  }
  for (const auto& [q, d] : factors) {
    PrimeClasses classes = classes_mod_prime(s, q, d);
    Int count = static_cast<unsigned long>(classes.classes.size());
    Int limit = projective_count(q, s.k());
    if (count >= limit) {
      std::vector<int> witness;
      for (const auto& cls : classes.classes) {
        witness.push_back(cls.front());
        if (Int(static_cast<unsigned long>(witness.size())) == limit) break;
      }
      return {false, Cond2Failure{q, std::move(witness)}};
    }
  }
  return {true, std::nullopt};
}

VolumeOneVerdict decide_volume_one(const Specialization& s) {
  VolumeOneVerdict verdict;
  verdict.epsilon = epsilon_of(s);
  verdict.prime_factors = factorize(verdict.epsilon);
  Cond1Result c1 = check_condition1(s);
  if (!c1.ok) {
    verdict.exists = false;
    verdict.cond1_failure = c1.failure;
    return verdict;
  }
  Cond2Result c2 = check_condition2(s);
  if (!c2.ok) {
    verdict.exists = false;
    verdict.cond2_failure = c2.failure;
    return verdict;
  }
  verdict.exists = true;
  return verdict;
}

Matrix construct_volume_one(const Specialization& s) {
  VolumeOneVerdict verdict = decide_volume_one(s);
  if (!verdict.exists)
    fail(Errc::kConditionsNotSatisfied,
         "no representation with primitive columns exists");
  const int k = s.k();
  const int n = s.n();
  const Int& eps = verdict.epsilon;

  // Representation of the scaled specialization s / eps. Condition (1)
  // makes every column of it primitive automatically.
  std::vector<Int> scaled;
  scaled.reserve(s.values().size());
  for (const Int& v : s.values()) {
    Int q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), eps.get_mpz_t());
    scaled.push_back(q);
  }
  Matrix x = realize(Specialization(n, k, std::move(scaled)));

  if (!verdict.prime_factors.empty()) {
    // Per prime: reduce mod q, pick a vector v off every column line, and
    // record the elimination data (pivot row, multipliers).
    std::vector<int> pivot_row(verdict.prime_factors.size());
    std::vector<std::vector<Int>> multipliers(verdict.prime_factors.size());
    for (std::size_t l = 0; l < verdict.prime_factors.size(); ++l) {
      const Int& q = verdict.prime_factors[l].q;
      std::set<std::vector<Int>> lines;
      for (int j = 0; j < n; ++j) {
        std::vector<Int> y(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) y[static_cast<std::size_t>(i)] =
            mod_floor(x.at(i, j), q);
        // canonical projective point: first nonzero entry scaled to 1
        int first = -1;
        for (int i = 0; i < k; ++i)
          if (y[static_cast<std::size_t>(i)] != 0) {
            first = i;
            break;
          }
        require(first >= 0, Errc::kInternalPostconditionFailure,
                "column vanished mod a prime dividing epsilon");
        XgcdResult inv = xgcd(y[static_cast<std::size_t>(first)], q);
        for (int i = 0; i < k; ++i)
          y[static_cast<std::size_t>(i)] =
              mod_floor(y[static_cast<std::size_t>(i)] * inv.u, q);
        lines.insert(std::move(y));
      }
      // Scan P(F_q^k) in lexicographic normal form for the first point off
      // every line.
      std::vector<Int> v(static_cast<std::size_t>(k), Int(0));
      bool found = false;
      while (!found) {
        int t = k - 1;
        while (t >= 0 && v[static_cast<std::size_t>(t)] == q - 1) {
          v[static_cast<std::size_t>(t)] = 0;
          --t;
        }
        require(t >= 0, Errc::kInternalPostconditionFailure,
                "no vector off the column lines although condition 2 holds");
        v[static_cast<std::size_t>(t)] += 1;
        int first = 0;
        while (v[static_cast<std::size_t>(first)] == 0) ++first;
        if (v[static_cast<std::size_t>(first)] != 1) continue;  // not normal form
        if (!lines.count(v)) {
          found = true;
          pivot_row[l] = first;
          multipliers[l] = v;
        }
      }
    }

    // CRT-combine the per-prime eliminations into one integer row operation.
    Matrix mu(k, k);
    bool any = false;
    for (int m = 0; m < k; ++m)
      for (int c = 0; c < k; ++c) {
        std::vector<Congruence> congruences;
        bool nonzero = false;
        for (std::size_t l = 0; l < verdict.prime_factors.size(); ++l) {
          Int residue = 0;
          if (c == pivot_row[l] && m > pivot_row[l])
            residue = multipliers[l][static_cast<std::size_t>(m)];
          if (residue != 0) nonzero = true;
          congruences.push_back({residue, verdict.prime_factors[l].q});
        }
        if (nonzero) {
          mu.at(m, c) = crt(congruences);
          any = true;
        }
      }
    if (any) {
      Matrix op = Matrix::identity(k);
      for (int m = 0; m < k; ++m)
        for (int c = 0; c < k; ++c) op.at(m, c) -= mu.at(m, c);
      x = op * x;
    }
    // Restore the minors: scale each pivot row by its primes' full powers.
    for (std::size_t l = 0; l < verdict.prime_factors.size(); ++l) {
      Int scale = pow_int(verdict.prime_factors[l].q,
                          verdict.prime_factors[l].d);
      int row = pivot_row[l];
      for (int j = 0; j < n; ++j) x.at(row, j) *= scale;
    }
  }

  require(pluecker_of_matrix(x) == s, Errc::kInternalPostconditionFailure,
          "constructed matrix fails the minor round trip");
  for (int j = 0; j < n; ++j) {
    Matrix col(k, 1);
    for (int i = 0; i < k; ++i) col.at(i, 0) = x.at(i, j);
    require(volume(col) == 1, Errc::kInternalPostconditionFailure,
            "constructed matrix has an imprimitive column");
  }
  return x;
}

ReducedRow reduce_prime_row(const Matrix& x, const Int& q) {
  require(is_prime(q), Errc::kNonPrimeModulus,
          int_to_string(q) + " is not prime");
  const int k = x.rows();
  const int n = x.cols();
  for (int j = 0; j < n; ++j) {
    Matrix col(k, 1);
    for (int i = 0; i < k; ++i) col.at(i, 0) = x.at(i, j);
    require(volume(col) == 1, Errc::kPreconditionViolated,
            "column " + std::to_string(j + 1) + " is not primitive");
  }

  // Row-reduce x mod q, carrying for every echelon row its expression over
  // the original rows, so dependent integer rows can be cleared by adding
  // multiples of independent ones (determinant-1 operations).
  std::vector<int> basis_rows;
  std::vector<std::vector<Int>> reduced;      // echelon rows over F_q
  std::vector<std::vector<Int>> expressions;  // over the k original rows
  Matrix out = x;
  std::vector<int> dependent_rows;
  for (int i = 0; i < k; ++i) {
    std::vector<Int> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      row[static_cast<std::size_t>(j)] = mod_floor(x.at(i, j), q);
    std::vector<Int> expr(static_cast<std::size_t>(k), Int(0));
    expr[static_cast<std::size_t>(i)] = 1;
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      int lead = -1;
      for (int j = 0; j < n; ++j)
        if (reduced[b][static_cast<std::size_t>(j)] != 0) {
          lead = j;
          break;
        }
      const Int c = row[static_cast<std::size_t>(lead)];
      if (c == 0) continue;
      // reduced rows are normalized to a leading 1
      for (int j = 0; j < n; ++j)
        row[static_cast<std::size_t>(j)] = mod_floor(
            row[static_cast<std::size_t>(j)] -
                c * reduced[b][static_cast<std::size_t>(j)],
            q);
      for (int t = 0; t < k; ++t)
        expr[static_cast<std::size_t>(t)] = mod_floor(
            expr[static_cast<std::size_t>(t)] -
                c * expressions[b][static_cast<std::size_t>(t)],
            q);
    }
    bool zero = std::all_of(row.begin(), row.end(),
                            [](const Int& v) { return v == 0; });
    if (zero) {
      // expr combines the original rows to zero mod q with coefficient 1 on
      // row i; add the lifted multiples of the basis rows to clear row i.
      for (int t = 0; t < k; ++t) {
        if (t == i || expr[static_cast<std::size_t>(t)] == 0) continue;
        for (int j = 0; j < n; ++j)
          out.at(i, j) += expr[static_cast<std::size_t>(t)] * x.at(t, j);
      }
      dependent_rows.push_back(i);
    } else {
      int lead = -1;
      for (int j = 0; j < n; ++j)
        if (row[static_cast<std::size_t>(j)] != 0) {
          lead = j;
          break;
        }
      XgcdResult inv = xgcd(row[static_cast<std::size_t>(lead)], q);
      for (int j = 0; j < n; ++j)
        row[static_cast<std::size_t>(j)] =
            mod_floor(row[static_cast<std::size_t>(j)] * inv.u, q);
      for (int t = 0; t < k; ++t)
        expr[static_cast<std::size_t>(t)] =
            mod_floor(expr[static_cast<std::size_t>(t)] * inv.u, q);
      reduced.push_back(std::move(row));
      expressions.push_back(std::move(expr));
      basis_rows.push_back(i);
    }
  }
  require(!basis_rows.empty(), Errc::kPreconditionViolated,
          "matrix vanishes mod q, contradicting primitive columns");
  require(static_cast<int>(basis_rows.size()) < k, Errc::kPreconditionViolated,
          "q does not divide every maximal minor");

  // Move the first dependent (now zero mod q) row to the front by a cyclic
  // shift; report the permutation's sign.
  int m = dependent_rows.front();
  Matrix permuted(k, n);
  for (int j = 0; j < n; ++j) permuted.at(0, j) = out.at(m, j);
  int dst = 1;
  for (int i = 0; i < k; ++i) {
    if (i == m) continue;
    for (int j = 0; j < n; ++j) permuted.at(dst, j) = out.at(i, j);
    ++dst;
  }
  int sign = (m % 2 == 0) ? 1 : -1;  // cycle of length m+1
  for (int j = 0; j < n; ++j)
    require(mpz_divisible_p(permuted.at(0, j).get_mpz_t(), q.get_mpz_t()),
            Errc::kInternalPostconditionFailure,
            "first row not divisible by q after reduction");
  return {permuted, sign};
}

NBoundResult check_n_bound(const Specialization& s, const Int& q) {
  require(is_prime(q), Errc::kNonPrimeModulus,
          int_to_string(q) + " is not prime");
  require_nonzero(s);
  unsigned long first = finite_valuation(s.values()[0], q);
  for (const Int& v : s.values())
    if (finite_valuation(v, q) != first) return {true, false};
  bool holds = binomial(s.n(), s.k() - 1) <= projective_count(q, s.k());
  return {holds, true};
}

}  // namespace grassfrieze
