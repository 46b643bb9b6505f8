#pragma once

#include <stdexcept>
#include <string>

namespace fermiq {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands act on different qubit/orbital counts, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated (ordering constraints,
/// non-Hermitian input, invalid parameter ranges).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Dense-matrix qubit cap exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed integrals file. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fermiq
