#include "thetaq/error.hpp"

namespace thetaq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::IncompatibleOrders: return "IncompatibleOrders";
    case ErrorKind::OrderNotDivisibleBy4: return "OrderNotDivisibleBy4";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::ValidityExceeded: return "ValidityExceeded";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::NonMonomialArgument: return "NonMonomialArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::MixedVariables: return "MixedVariables";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ExponentNotInteger: return "ExponentNotInteger";
    case ErrorKind::MissingEquals: return "MissingEquals";
    case ErrorKind::MultipleEquals: return "MultipleEquals";
    case ErrorKind::UnknownIdentityName: return "UnknownIdentityName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace thetaq
