#include "betaseries/error.hpp"

namespace betaseries {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_monic: return "NotMonic";
    case ErrorCode::reducible: return "Reducible";
    case ErrorCode::no_root_above_one: return "NoRootAboveOne";
    case ErrorCode::base_mismatch: return "BaseMismatch";
    case ErrorCode::precision_budget_exceeded: return "PrecisionBudgetExceeded";
    case ErrorCode::invalid_polynomial: return "InvalidPolynomial";
    case ErrorCode::floor_tie_unresolvable: return "FloorTieUnresolvable";
    case ErrorCode::horizon_exceeded: return "HorizonExceeded";
    case ErrorCode::empty_below_r: return "EmptyBelowR";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::invalid_sequence: return "InvalidSequence";
    case ErrorCode::horizon_insufficient: return "HorizonInsufficient";
    case ErrorCode::unsupported_base: return "UnsupportedBase";
    case ErrorCode::out_of_unit_interval: return "OutOfUnitInterval";
    case ErrorCode::insufficient_digits: return "InsufficientDigits";
    case ErrorCode::tie_undecidable: return "TieUndecidable";
    case ErrorCode::degenerate_samples: return "DegenerateSamples";
    case ErrorCode::grid_too_small: return "GridTooSmall";
    case ErrorCode::no_closed_form_inverse: return "NoClosedFormInverse";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace betaseries
