#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The time march produced a non-finite value.
class BlowUpError : public Error {
 public:
  BlowUpError(double t, const std::string& what)
      : Error(what + " (t = " + std::to_string(t) + ")"), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// The breaking is not generic (vanishing cubic coefficient, empty lip, ...).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class SnapshotError : public Error {
 public:
  using Error::Error;
};

/// Quadrature truncation could not reach the requested tail bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dkp
