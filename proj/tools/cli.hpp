#pragma once

#include <iosfwd>

namespace betaseries::cli {

// Exit statuses.
inline constexpr int ok = 0;
inline constexpr int usage_error = 1;
inline constexpr int precondition_error = 2;
inline constexpr int indeterminate = 3;

/// Parses argv, runs one subcommand and writes its result to `out` (or the
/// --output file). Diagnostics go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betaseries::cli
