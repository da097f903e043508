#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypermet/explorer.hpp"

namespace hypermet {

/// Exit statuses of the command line.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (arguments without the program name). All output
/// goes to `out` / `err`, so the CLI can be driven in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Iteration trace: one line per tested candidate, in (iteration, candidate) order.
void write_exploration_log(std::ostream& out, const ExplorationState& state, const ExplorationResult& result);
/// Summary: status, counts, and the isometry classes of the neighbors.
void write_exploration_classes(std::ostream& out, const ExplorationState& state, const ExplorationResult& result);

}  // namespace hypermet
