#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgp {

using Int = std::int64_t;

// Base for every domain error thrown by this library.  Subclasses map 1:1
// onto the error vocabulary used by the CLI exit-code policy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGeneratorsError : Error {
  EmptyGeneratorsError() : Error("EmptyGenerators: generator list is empty") {}
};

struct NonPositiveError : Error {
  explicit NonPositiveError(Int g)
      : Error("NonPositive: generator " + std::to_string(g) +
              " is not a positive integer") {}
};

struct NonCoprimeError : Error {
  explicit NonCoprimeError(Int g)
      : Error("NonCoprime: generators have gcd " + std::to_string(g) +
              " != 1, complement is infinite") {}
};

struct NotInSemigroupError : Error {
  explicit NotInSemigroupError(Int s)
      : Error("NotInSemigroup: " + std::to_string(s) + " is not a member") {}
};

// Window failures are loud by contract: no operation silently truncates.
// `need` is kept so a caller can rebuild the semigroup with a sufficient
// window hint and retry.
struct OutOfWindowError : Error {
  Int need;
  Int have;
  explicit OutOfWindowError(Int need_, Int have_)
      : Error("OutOfWindow: requires window >= " + std::to_string(need_) +
              " but semigroup was built with " + std::to_string(have_) +
              "; rebuild with a larger window hint"),
        need(need_),
        have(have_) {}
};

struct ParentMismatchError : Error {
  ParentMismatchError()
      : Error("ParentMismatch: ideals belong to different semigroups") {}
};

struct NotIntegralError : Error {
  NotIntegralError()
      : Error("NotIntegral: ideal has members outside the semigroup") {}
};

struct ZeroIdealError : Error {
  ZeroIdealError() : Error("ZeroIdeal: operation needs a nonzero ideal") {}
};

struct ImproperIdealError : Error {
  ImproperIdealError()
      : Error("ImproperIdeal: operation needs a proper ideal (0 excluded)") {}
};

struct NotGorensteinError : Error {
  NotGorensteinError()
      : Error("NotGorenstein: semigroup is not symmetric, index undefined") {}
};

struct NotAReductionError : Error {
  explicit NotAReductionError(Int a)
      : Error("NotAReduction: (" + std::to_string(a) +
              ") is not a reduction of the maximal ideal") {}
};

// Internal hard bounds (conductor + 2) are asserted; tripping one is a bug,
// not a data condition.
struct BoundExceededError : Error {
  explicit BoundExceededError(const std::string& what_op)
      : Error("BoundExceeded: internal search bound exceeded in " + what_op) {}
};

struct UnknownPropositionError : Error {
  explicit UnknownPropositionError(const std::string& id)
      : Error("UnknownProposition: " + id) {}
};

struct PreconditionFailedError : Error {
  explicit PreconditionFailedError(const std::string& why)
      : Error("PreconditionFailed: " + why) {}
};

struct ParseError : Error {
  std::size_t offset;  // byte offset of the first offending character
  ParseError(const std::string& why, std::size_t off)
      : Error("ParseError at byte " + std::to_string(off) + ": " + why),
        offset(off) {}
};

}  // namespace sgp
