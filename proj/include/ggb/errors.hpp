#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct DegreeOutOfRange : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

/// Parse failure; `offset` is the byte position in the input, `expected`
/// describes the token set that would have been accepted there.
struct SyntaxError : Error {
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at byte " + std::to_string(offset) + ": expected " +
              expected),
        offset(offset),
        expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

struct NonIntegralChern : Error {
  using Error::Error;
};

struct RankViolation : Error {
  using Error::Error;
};

struct RankTooSmall : Error {
  using Error::Error;
};

struct InvalidAtDimension : Error {
  using Error::Error;
};

struct UnsupportedExpression : Error {
  using Error::Error;
};

struct UnsupportedOperation : Error {
  using Error::Error;
};

}  // namespace ggb
