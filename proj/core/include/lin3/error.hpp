#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lin3 {

enum class Errc {
  OutOfRange,
  NotATriple,
  NotLinear,
  InvalidLines,
  InvalidPartition,
  PatternTooLarge,
  GroundTooSmall,
  GroundMismatch,
  ExchangeViolation,
  LineTooShort,
  InternalLinearityFailure,
  NotDecodable,
  BudgetExceeded,
  MissingCount,
  Parse,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lin3
