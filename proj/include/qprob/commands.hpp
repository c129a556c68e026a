#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qprob/decompose.hpp"
#include "qprob/json_io.hpp"

namespace qprob {

struct CommandOptions {
  ZeroPolicy zero_policy = ZeroPolicy::to_pos;
  std::vector<Rat> p_values;               // empty → per-command default
  std::optional<std::string> grid_path;    // archery / knife grid override
  std::size_t max_violations = kDefaultViolationLimit;
};

// What every invocation prints: a JSON report with a stable key order.
// status is "ok", "infeasible", or "error"; an error report carries
// diagnostics and no payload, everything else the reverse.
struct CommandReport {
  std::string command;
  std::string status;
  std::optional<Json> payload;
  std::vector<std::string> diagnostics;

  Json to_json() const;
  int exit_code() const;  // 0 ok, 1 infeasible, 2 error
};

// command ∈ {axioms, solve, decompose, bayes, quotient, archery, knife}.
// Exceptions are caught and folded into an error report, so this never
// throws on bad input — only on internal faults.
CommandReport run_command(const std::string& command, const std::string& input_path,
                          const CommandOptions& options);

// `archery` needs no input file; everything else does.
bool command_needs_input(const std::string& command);

// Runs one command over every *.json file in a directory (sorted by name).
std::vector<CommandReport> run_batch(const std::string& command, const std::string& directory,
                                     const CommandOptions& options);

}  // namespace qprob
