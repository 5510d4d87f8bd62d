#pragma once

#include <stdexcept>
#include <string>

namespace pairable {

// Base type for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Pole of the Gamma function (non-positive integer argument).
struct PoleError : DomainError {
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

#define PAIRABLE_DEFINE_ERROR(NAME, BASE)                     \
  struct NAME : BASE {                                        \
    explicit NAME(const std::string& what) : BASE(what) {}    \
  }

PAIRABLE_DEFINE_ERROR(NonConvergence, Error);     // iteration/subdivision limit reached
PAIRABLE_DEFINE_ERROR(NonFinite, Error);          // NaN or infinity where a finite value is required
PAIRABLE_DEFINE_ERROR(NoBracket, Error);          // root finder called without a sign change
PAIRABLE_DEFINE_ERROR(DivisionByZero, Error);
PAIRABLE_DEFINE_ERROR(SingularLocus, Error);      // period function undefined at this (x, y)
PAIRABLE_DEFINE_ERROR(DegenerateBase, Error);     // exponential base a = 1
PAIRABLE_DEFINE_ERROR(UnsupportedError, Error);
PAIRABLE_DEFINE_ERROR(NoRealRoot, Error);
PAIRABLE_DEFINE_ERROR(BranchPole, Error);         // branch point of a square-root branch
PAIRABLE_DEFINE_ERROR(ZeroDenominator, Error);
PAIRABLE_DEFINE_ERROR(NoFinitePeriod, Error);
PAIRABLE_DEFINE_ERROR(InternalConsistency, Error);  // closed form failed its own residual check

#undef PAIRABLE_DEFINE_ERROR

}  // namespace pairable
