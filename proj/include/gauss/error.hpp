#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gauss {

enum class ErrorKind {
  InvalidParameter,
  OrderOverflow,
  IndexOutOfRange,
  NotAbelian,
  LatticeOverflow,
  NotNormal,
  NotPrimePower,
  MixedPrimes,
  UnknownSuite,
  RangeTooLarge,
  ParseError,
  NotAGroup,
  IdentityNotZero,
  NotAPermutation,
  IoError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::LatticeOverflow: return "LatticeOverflow";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::MixedPrimes: return "MixedPrimes";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::RangeTooLarge: return "RangeTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::IdentityNotZero: return "IdentityNotZero";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is
/// stable and machine-checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text readers; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A table that failed a group axiom. `witness` holds the offending indices;
/// for associativity it is the triple (a, b, c), for the Latin-square check it
/// is (row-or-column index, first position, repeated position).
class NotAGroupError : public Error {
 public:
  NotAGroupError(std::string axiom, std::array<std::size_t, 3> witness)
      : Error(ErrorKind::NotAGroup, axiom + " fails at (" + std::to_string(witness[0]) + ", " +
                                        std::to_string(witness[1]) + ", " +
                                        std::to_string(witness[2]) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<std::size_t, 3> witness_;
};

}  // namespace gauss
