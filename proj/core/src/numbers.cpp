#include "grassfrieze/numbers.hpp"

#include <algorithm>
#include <cctype>

namespace grassfrieze {

namespace {

// Largest divisor tried before factorization gives up. Desk-scale inputs
// keep gcds of Pluecker values tiny; anything past this bound is a misuse.
const unsigned long kTrialDivisionBound = 1000000UL;

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kNotSquare: return "NotSquare";
    case Errc::kBadShape: return "BadShape";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kNonPrimeModulus: return "NonPrimeModulus";
    case Errc::kNonCoprimeModuli: return "NonCoprimeModuli";
    case Errc::kZeroValue: return "ZeroValue";
    case Errc::kZeroColumn: return "ZeroColumn";
    case Errc::kInconsistentSpecialization: return "InconsistentSpecialization";
    case Errc::kInvalidTriangulation: return "InvalidTriangulation";
    case Errc::kSubsetTooSmall: return "SubsetTooSmall";
    case Errc::kNonPositive: return "NonPositive";
    case Errc::kRankDeficientWindow: return "RankDeficientWindow";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kConditionsNotSatisfied: return "ConditionsNotSatisfied";
    case Errc::kNonTransitiveRelation: return "NonTransitiveRelation";
    case Errc::kUnknownSystem: return "UnknownSystem";
    case Errc::kInputError: return "InputError";
    case Errc::kMissingFixture: return "MissingFixture";
    case Errc::kResourceLimit: return "ResourceLimit";
    case Errc::kNonTermination: return "NonTermination";
    case Errc::kInternalPostconditionFailure: return "InternalPostconditionFailure";
  }
  return "UnknownError";
}

Int int_from_string(const std::string& text) {
  if (text.empty()) fail(Errc::kInputError, "empty integer string");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size())
    fail(Errc::kInputError, "bad integer string '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(Errc::kInputError, "bad integer string '" + text + "'");
  }
  return Int(text);
}

std::string int_to_string(const Int& value) { return value.get_str(); }

XgcdResult xgcd(const Int& a, const Int& b) {
  XgcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd_many(const std::vector<Int>& values) {
  Int g = 0;
  for (const Int& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

GcdBezout gcd_many_bezout(const std::vector<Int>& values) {
  GcdBezout out;
  out.g = 0;
  out.coefficients.reserve(values.size());
  for (const Int& v : values) {
    XgcdResult step = xgcd(out.g, v);
    for (Int& c : out.coefficients) c *= step.u;
    out.coefficients.push_back(step.v);
    out.g = step.g;
  }
  return out;
}

Valuation valuation(const Int& a, const Int& q) {
  require(is_prime(q), Errc::kNonPrimeModulus,
          "valuation modulus " + int_to_string(q) + " is not prime");
  if (a == 0) return Valuation::infinite();
  Int rest = abs(a);
  Int p = abs(q);
  unsigned long m = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++m;
  }
  return Valuation::finite(m);
}

Int crt(const std::vector<Congruence>& congruences) {
  Int x = 0;
  Int m = 1;
  for (const Congruence& c : congruences) {
    require(c.modulus >= 2, Errc::kInputError,
            "crt modulus must be at least 2");
    XgcdResult e = xgcd(m, c.modulus);
    require(e.g == 1, Errc::kNonCoprimeModuli,
            "moduli " + int_to_string(m) + " and " + int_to_string(c.modulus) +
                " share a factor");
    // x + m*t == c.residue (mod c.modulus), with e.u the inverse of m.
    Int t = mod_floor(e.u * (c.residue - x), c.modulus);
    x += m * t;
    m *= c.modulus;
  }
  return mod_floor(x, m);
}

bool is_prime(const Int& q) {
  Int p = abs(q);
  if (p < 2) return false;
  Int bound = Int(kTrialDivisionBound) * Int(kTrialDivisionBound);
  if (p > bound)
    fail(Errc::kResourceLimit,
         "primality test beyond trial-division range: " + int_to_string(p));
  for (Int d = 2; d * d <= p; ++d) {
    if (mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(const Int& n) {
  require(n >= 1, Errc::kInputError, "factorize expects a positive integer");
  std::vector<PrimePower> factors;
  Int rest = n;
  for (Int d = 2; d * d <= rest; ++d) {
    if (d > kTrialDivisionBound)
      fail(Errc::kResourceLimit,
           "factorization beyond trial-division range: " + int_to_string(n));
    if (!mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) continue;
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    factors.push_back({d, e});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return factors;
}

Int projective_count(const Int& q, int k) {
  require(k >= 1, Errc::kInputError, "projective_count needs k >= 1");
  require(is_prime(q), Errc::kNonPrimeModulus,
          int_to_string(q) + " is not prime");
  Int p = abs(q);
  Int numerator = pow_int(p, static_cast<unsigned long>(k)) - 1;
  Int out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), Int(p - 1).get_mpz_t());
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int mod_floor(const Int& a, const Int& m) {
  require(m > 0, Errc::kInternalPostconditionFailure, "mod_floor modulus <= 0");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace grassfrieze
