#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thetaq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // identity failed / dissection disagreed
inline constexpr int kUsage = 2;       // parse error, bad flags, unknown names
inline constexpr int kEvaluation = 3;  // NonConvergent, NonMonomialArgument, ...

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetaq::cli
