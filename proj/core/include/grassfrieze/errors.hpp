#pragma once

#include <stdexcept>
#include <string>

namespace grassfrieze {

// Every failure the library reports deliberately. Input problems and violated
// preconditions are kInput-category; kInternal signals a bug caught by a
// postcondition audit; kResource signals a guard against runaway enumeration.
enum class Errc {
  kNotSquare,
  kBadShape,
  kShapeMismatch,
  kSingularMatrix,
  kNonPrimeModulus,
  kNonCoprimeModuli,
  kZeroValue,
  kZeroColumn,
  kInconsistentSpecialization,
  kInvalidTriangulation,
  kSubsetTooSmall,
  kNonPositive,
  kRankDeficientWindow,
  kPreconditionViolated,
  kConditionsNotSatisfied,
  kNonTransitiveRelation,
  kUnknownSystem,
  kInputError,
  kMissingFixture,
  kResourceLimit,
  kNonTermination,
  kInternalPostconditionFailure,
};

enum class ErrorCategory { kInput, kResource, kInternal };

constexpr ErrorCategory category(Errc code) {
  switch (code) {
    case Errc::kResourceLimit:
      return ErrorCategory::kResource;
    case Errc::kNonTermination:
    case Errc::kInternalPostconditionFailure:
      return ErrorCategory::kInternal;
    default:
      return ErrorCategory::kInput;
  }
}

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace grassfrieze
