#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roth::cli {

enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,
  kUsage = 2,
  kInvariantViolation = 3,
};

/// Runs one rothctl invocation. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The `verify` property suite: one PASS/FAIL line per property on `out`.
/// Returns false when any property fails.
bool run_invariant_suite(std::size_t max_order, std::uint64_t seed, std::ostream& out);

}  // namespace roth::cli
