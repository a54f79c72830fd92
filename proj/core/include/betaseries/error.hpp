#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betaseries {

enum class ErrorCode {
  // algebraic_core
  not_monic,
  reducible,
  no_root_above_one,
  base_mismatch,
  precision_budget_exceeded,
  invalid_polynomial,
  // exponent_sequences
  floor_tie_unresolvable,
  horizon_exceeded,
  empty_below_r,
  domain_error,
  invalid_sequence,
  // series_values / beta_digits
  horizon_insufficient,
  unsupported_base,
  out_of_unit_interval,
  insufficient_digits,
  // criteria_checkers
  tie_undecidable,
  degenerate_samples,
  grid_too_small,
  no_closed_form_inverse,
  // plumbing
  parse_error,
  invalid_argument,
  io_error,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace betaseries
