#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thetaq {

enum class ErrorKind {
  OrderMismatch,
  IncompatibleOrders,
  OrderNotDivisibleBy4,
  EmptySeries,
  ValidityExceeded,
  NonConvergent,
  NonMonomialArgument,
  NotInvertible,
  MixedVariables,
  SyntaxError,
  ExponentNotInteger,
  MissingEquals,
  MultipleEquals,
  UnknownIdentityName,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure. `offset` is a byte offset into the source text (equal to the
// text length when the input ended early); `expected` lists token kinds that
// would have been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, std::vector<std::string> expected,
             const std::string& message)
      : Error(kind, message + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

inline bool is_parse_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::ExponentNotInteger ||
         kind == ErrorKind::MissingEquals || kind == ErrorKind::MultipleEquals;
}

}  // namespace thetaq
