#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassfrieze/errors.hpp"

namespace grassfrieze {

// Exact arbitrary-precision integer. All arithmetic in the library is over
// the ring of integers; no operation is allowed to overflow or round.
using Int = mpz_class;

Int int_from_string(const std::string& text);
std::string int_to_string(const Int& value);

struct XgcdResult {
  Int g;  // nonnegative generator of (a, b)
  Int u;
  Int v;  // g == u*a + v*b
};

// Extended Euclid with GMP's sign conventions: g >= 0, xgcd(0,0) = (0,0,0),
// xgcd(-3,0) = (3,-1,0).
XgcdResult xgcd(const Int& a, const Int& b);

// Nonnegative generator of the ideal spanned by all values; 0 for the empty
// list.
Int gcd_many(const std::vector<Int>& values);

struct GcdBezout {
  Int g;
  std::vector<Int> coefficients;  // sum coefficients[i]*values[i] == g
};

// Left-to-right xgcd fold, so the Bezout coefficients are deterministic.
GcdBezout gcd_many_bezout(const std::vector<Int>& values);

// q-adic valuation. Zero has infinite valuation, modelled by an empty
// optional.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(std::nullopt); }
  static Valuation finite(unsigned long v) { return Valuation(v); }

  bool is_infinite() const { return !value_.has_value(); }
  unsigned long finite_value() const {
    require(value_.has_value(), Errc::kInternalPostconditionFailure,
            "finite_value() on infinite valuation");
    return *value_;
  }
  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  explicit Valuation(std::optional<unsigned long> v) : value_(v) {}
  std::optional<unsigned long> value_;
};

// Requires |q| prime; throws kNonPrimeModulus otherwise.
Valuation valuation(const Int& a, const Int& q);

struct Congruence {
  Int residue;
  Int modulus;  // >= 2
};

// Simultaneous solution in [0, prod moduli); moduli must be pairwise coprime.
Int crt(const std::vector<Congruence>& congruences);

// Deterministic primality for the magnitudes this library handles. Values
// whose smallest factor exceeds the trial-division bound raise
// kResourceLimit instead of guessing.
bool is_prime(const Int& q);

struct PrimePower {
  Int q;
  unsigned long d;
};

// Trial-division factorization of n >= 1, ascending primes.
std::vector<PrimePower> factorize(const Int& n);

// (q^k - 1)/(q - 1): the number of lines through the origin in F_q^k.
Int projective_count(const Int& q, int k);

Int binomial(int n, int k);

Int pow_int(const Int& base, unsigned long exp);

// Floor-mod into [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

}  // namespace grassfrieze
