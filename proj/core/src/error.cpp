#include "lin3/error.hpp"

namespace lin3 {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotATriple: return "NotATriple";
    case Errc::NotLinear: return "NotLinear";
    case Errc::InvalidLines: return "InvalidLines";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::PatternTooLarge: return "PatternTooLarge";
    case Errc::GroundTooSmall: return "GroundTooSmall";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::ExchangeViolation: return "ExchangeViolation";
    case Errc::LineTooShort: return "LineTooShort";
    case Errc::InternalLinearityFailure: return "InternalLinearityFailure";
    case Errc::NotDecodable: return "NotDecodable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MissingCount: return "MissingCount";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lin3
