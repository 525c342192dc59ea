#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simspec {

enum class ErrorKind {
  CompositeCharacteristic,
  DegreeZero,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  BadFrobeniusBase,
  ZeroPolynomial,
  NonSquare,
  NotACycle,
  DimensionMismatch,
  NotInvariant,
  Singular,
  InvalidType,
  NotDominant,
  NoSuchAutomorphism,
  BadCharacteristic,
  InvariantNotFound,
  CenterDimensionUnexpected,
  UnknownCase,
  CaseMismatch,
  BranchMismatch,
  BudgetExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace simspec
