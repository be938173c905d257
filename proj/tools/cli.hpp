#pragma once

#include <iosfwd>

namespace lin3::cli {

/// Exit statuses of the lin3 tool.
enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

/// Runs one invocation. All output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lin3::cli
