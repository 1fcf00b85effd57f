#pragma once

#include <iosfwd>

namespace ifree {

/// Exit statuses of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_domain = 2, exit_io = 3 };

/// Parses argv, runs one verb and writes its JSON result to `out` (or the --out file).
/// Input files named "-" are read from `in`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ifree
