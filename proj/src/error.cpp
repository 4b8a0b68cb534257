#include "bracekit/error.hpp"

namespace bracekit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotGStable: return "NotGStable";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::BraceRelationFails: return "BraceRelationFails";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string located(const std::string& message, int line, int column) {
  std::string s = "line " + std::to_string(line);
  if (column > 0) s += ", column " + std::to_string(column);
  s += ": " + message;
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::Parse, located(message, line, column)), line_(line), column_(column) {}

}  // namespace bracekit
