#pragma once

#include <iosfwd>

namespace splitquat::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // parse, I/O, usage and unsupported-input errors
  kNonGeneric = 2,
  kVerificationFailed = 3,
};

/// Runs the tool on argv. Report output goes to `out` unless --out names a
/// file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splitquat::cli
