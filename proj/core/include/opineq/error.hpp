#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opineq {

enum class Errc {
  NonHermitianInput,
  NotPositiveSemidefinite,
  SingularMatrix,
  DimensionMismatch,
  WeightOutOfRange,
  BadBounds,
  NonPositiveArgument,
  DegenerateInterval,
  UnknownInequality,
  HypothesisNotMet,
  MalformedSpec,
  UnknownKind,
  IncompatibleEntries,
  ConfigInvalid,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace opineq
