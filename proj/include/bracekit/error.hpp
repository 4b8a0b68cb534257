#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bracekit {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnknownName,
  NotASubgroup,
  NotRegular,
  NotGStable,
  IdentityMismatch,
  BraceRelationFails,
  OrderMismatch,
  NotAnIdeal,
  BoundExceeded,
  Parse,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error carrying an optional witness (the element indices involved in
/// the failure, already named in the message).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

/// Input format error with a 1-based line and, when known, a 1-based column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = -1);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bracekit
