#include "simspec/error.hpp"

namespace simspec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::BadFrobeniusBase: return "BadFrobeniusBase";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NoSuchAutomorphism: return "NoSuchAutomorphism";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::InvariantNotFound: return "InvariantNotFound";
    case ErrorKind::CenterDimensionUnexpected: return "CenterDimensionUnexpected";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::BranchMismatch: return "BranchMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace simspec
