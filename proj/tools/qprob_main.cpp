// Command-line front end: wires JSON inputs to the library modules and
// prints one machine-readable report (or, in batch mode, an array of them).

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "qprob/commands.hpp"
#include "qprob/error.hpp"

namespace {

qprob::ZeroPolicy parse_zero_policy(const std::string& name) {
  if (name == "to-pos") return qprob::ZeroPolicy::to_pos;
  if (name == "to-neg") return qprob::ZeroPolicy::to_neg;
  return qprob::ZeroPolicy::enumerate_all;
}

void print_report(const qprob::Json& j) { std::cout << j.dump(2) << "\n"; }

int fail_with(const std::string& command, const std::string& message) {
  qprob::CommandReport report;
  report.command = command;
  report.status = "error";
  report.diagnostics.push_back(message);
  print_report(report.to_json());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qprob — exact-arithmetic toolkit for event rankings, signed-measure "
      "representations and decompositions, null quotients, and the polar-grid disk"};

  std::string command;
  std::string input_path;
  std::string zero_policy = "to-pos";
  std::string grid_path;
  std::string batch_dir;
  std::vector<std::string> p_values;
  std::size_t max_violations = qprob::kDefaultViolationLimit;

  app.add_option("command", command, "one of: axioms, solve, decompose, bayes, quotient, archery, knife")
      ->required()
      ->check(CLI::IsMember(
          {"axioms", "solve", "decompose", "bayes", "quotient", "archery", "knife"}));
  app.add_option("input", input_path, "path to the JSON input file (archery takes none)");
  app.add_option("--zero-policy", zero_policy,
                 "where zero-weight atoms go in the Hahn split (default to-pos)")
      ->check(CLI::IsMember({"to-pos", "to-neg", "enumerate-all"}));
  app.add_option("--p", p_values, "rational parameter values, e.g. --p 23/100,73/150")
      ->delimiter(',');
  app.add_option("--grid", grid_path, "polar grid JSON overriding the default 2×4 grid");
  app.add_option("--max-violations", max_violations,
                 "cap on reported axiom violations (totals are still exact)");
  app.add_option("--batch", batch_dir,
                 "run the command over every *.json file in a directory, sorted by name");

  CLI11_PARSE(app, argc, argv);

  qprob::CommandOptions options;
  options.zero_policy = parse_zero_policy(zero_policy);
  options.max_violations = max_violations;
  if (!grid_path.empty()) options.grid_path = grid_path;
  for (const std::string& text : p_values) {
    try {
      options.p_values.push_back(qprob::parse_rational(text));
    } catch (const qprob::Error& e) {
      return fail_with(command, std::string("bad --p value: ") + e.what());
    }
  }

  if (!batch_dir.empty()) {
    std::vector<qprob::CommandReport> reports;
    try {
      reports = qprob::run_batch(command, batch_dir, options);
    } catch (const std::exception& e) {
      return fail_with(command, std::string("batch directory error: ") + e.what());
    }
    qprob::Json out = qprob::Json::array();
    int exit_code = 0;
    for (const qprob::CommandReport& report : reports) {
      out.push_back(report.to_json());
      exit_code = std::max(exit_code, report.exit_code());
    }
    print_report(out);
    return exit_code;
  }

  if (qprob::command_needs_input(command) && input_path.empty()) {
    return fail_with(command, "this command requires a JSON input file");
  }

  const qprob::CommandReport report = qprob::run_command(command, input_path, options);
  print_report(report.to_json());
  return report.exit_code();
}
