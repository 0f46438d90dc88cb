#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

/// A cyclotomic value that was expected to lie in Q does not.
class NotRational : public Error {
 public:
  explicit NotRational(const std::string& what) : Error("not rational: " + what) {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

class NotIntegral : public Error {
 public:
  explicit NotIntegral(const std::string& what) : Error("not integral: " + what) {}
};

class ConductorExceeded : public Error {
 public:
  explicit ConductorExceeded(const std::string& what) : Error("conductor exceeded: " + what) {}
};

/// The product I(Z)(1-Y1 Z)(1-Y2 Z) has nonzero coefficients above the
/// clearing bound inside the computed window.
class TailViolation : public Error {
 public:
  explicit TailViolation(const std::string& what) : Error("tail violation: " + what) {}
};

class NotBigCell : public Error {
 public:
  explicit NotBigCell(const std::string& what) : Error("vector not supported on the big cell: " + what) {}
};

class CertificateCheckFailed : public Error {
 public:
  explicit CertificateCheckFailed(const std::string& what)
      : Error("membership certificate failed re-verification: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class ClassCoverageError : public Error {
 public:
  explicit ClassCoverageError(const std::string& what) : Error("class coverage: " + what) {}
};

}  // namespace toric
