#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polymc {

enum class ErrorKind {
  // geometry
  DuplicateVertex,
  EmptySimplex,
  DuplicateSimplex,
  IndexError,
  NotClosed,
  UnknownCell,
  ToleranceInvalid,
  // sets and models
  LengthMismatch,
  UnknownAtom,
  ModelTooLarge,
  // specification language
  SyntaxError,
  UnknownCommand,
  RedefinedName,
  UnknownIdentifier,
  ArityMismatch,
  RecursionDetected,
  InvalidArgument,
  ImportCycle,
  // files
  SchemaError,
  HashMismatch,
  NonTriangularFace,
  MalformedLine,
  InvalidParams,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (tests, the
/// CLI) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace polymc
