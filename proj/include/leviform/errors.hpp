#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leviform {

/// Machine-readable failure categories. The CLI prints these verbatim on
/// stderr, so the spelling is part of the external interface.
enum class ErrorCategory {
  InvalidArgument,
  ParseError,
  NotRealValued,
  NotInMaximalIdeal,
  ZeroInput,
  NonIsolated,
  NotQuasihomogeneous,
  NotSemiquasihomogeneous,
  PrincipalPart,
  NotLeviFlat,
  ResourceLimit,
};

std::string_view category_name(ErrorCategory category);

/// Base exception for every domain failure raised by the library.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Syntax or semantic error in an expression, with a 1-based position.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when a computation would exceed the configured degree cap.
class ResourceError : public DomainError {
 public:
  explicit ResourceError(const std::string& message)
      : DomainError(ErrorCategory::ResourceLimit, message) {}
};

}  // namespace leviform
