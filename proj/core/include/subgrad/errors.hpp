#ifndef SUBGRAD_ERRORS_HPP
#define SUBGRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subgrad {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: mismatched dimensions, non-finite data, bad file rows.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Missing or inconsistent configuration (wrong schedule kind, absent
// parameter, hypothesis mismatch). Maps to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given object (e.g. exact expectation over a
// non-enumerable sample space).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An oracle returned NaN/Inf or a run failed at execution time. Maps to CLI
// exit code 3.
class OracleError : public Error {
 public:
  using Error::Error;
};

// A theorem precondition failed numerically (e.g. nonpositive averaging
// denominator).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace subgrad

#endif  // SUBGRAD_ERRORS_HPP
