#include "opineq/error.hpp"

namespace opineq {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonHermitianInput: return "NonHermitianInput";
    case Errc::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::BadBounds: return "BadBounds";
    case Errc::NonPositiveArgument: return "NonPositiveArgument";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::UnknownInequality: return "UnknownInequality";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::MalformedSpec: return "MalformedSpec";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::IncompatibleEntries: return "IncompatibleEntries";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace opineq
