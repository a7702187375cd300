#include "polymc/error.hpp"

namespace polymc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::EmptySimplex: return "EmptySimplex";
    case ErrorKind::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::ToleranceInvalid: return "ToleranceInvalid";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::ModelTooLarge: return "ModelTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::RedefinedName: return "RedefinedName";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::RecursionDetected: return "RecursionDetected";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ImportCycle: return "ImportCycle";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::HashMismatch: return "HashMismatch";
    case ErrorKind::NonTriangularFace: return "NonTriangularFace";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

}  // namespace polymc
