#pragma once

#include <stdexcept>
#include <string>

namespace toprec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: zero denominators, invalid curves, bad parameters.
struct ValidationError : Error {
  using Error::Error;
};

/// A rational function evaluated at a root of its denominator.
struct PoleError : Error {
  using Error::Error;
};

/// A requested coefficient lies outside the provably known window.
struct PrecisionError : Error {
  PrecisionError(const std::string& what, int required_hi)
      : Error(what), required_hi(required_hi) {}
  int required_hi;  // smallest truncation bound that would have sufficed
};

/// Request outside the domain of an operation (e.g. unstable (g,n)).
struct DomainError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace toprec
