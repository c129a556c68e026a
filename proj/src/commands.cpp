#include "qprob/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <utility>

#include "qprob/error.hpp"
#include "qprob/quotient.hpp"
#include "qprob/repsolve.hpp"

namespace qprob {
namespace {

// Either kind of ranking input: a measure file yields its induced
// assessment, a levels file yields the assessment directly.
struct RankingInput {
  std::optional<SignedMeasure> measure;
  Assessment assessment;
};

RankingInput parse_ranking_input(const Json& input) {
  if (input.is_object() && input.contains("weights")) {
    SignedMeasure mu = measure_from_json(input);
    Assessment a = induced_assessment(mu);
    return {std::move(mu), std::move(a)};
  }
  if (input.is_object() && input.contains("levels")) {
    return {std::nullopt, assessment_from_json(input)};
  }
  throw ParseError(
      "input must be an object with either \"levels\" (a ranking) or \"weights\" (a measure)");
}

struct CommandOutcome {
  Json payload;
  bool infeasible = false;
};

// Sign tables enumerate every event; past this atom count they are omitted
// from the report rather than flooding it.
constexpr std::size_t kSignTableAtomLimit = 12;

Json run_axioms(const Json& input, const CommandOptions& options) {
  RankingInput in = parse_ranking_input(input);
  const Assessment& a = in.assessment;
  const std::size_t n = a.algebra().atom_count();

  Json payload;
  payload["algebra"] = algebra_to_json(a.algebra());
  payload["level_count"] = a.level_count();
  payload["separability"] = separability_to_json(check_separability(a, options.max_violations));
  payload["monotonicity"] = monotonicity_to_json(check_monotonicity(a, options.max_violations));
  payload["non_degenerate"] = check_nondegeneracy(a);
  payload["absoluteness"] = check_absoluteness(a);
  // On a finite algebra every monotone event sequence is eventually
  // constant, so the continuity axiom cannot fail.
  payload["continuity"] = Json{{"holds", true}, {"vacuous_on_finite_algebra", true}};

  if (n <= kSignTableAtomLimit) {
    Json table = Json::array();
    for (std::uint32_t bits = 0; bits < a.algebra().event_count(); ++bits) {
      const Event e = a.algebra().event(bits);
      Json row;
      row["event"] = event_to_json(e);
      row["profile"] = sign_profile_to_json(sign_classify(a, e));
      table.push_back(std::move(row));
    }
    payload["sign_table"] = std::move(table);
  } else {
    payload["sign_table"] = "omitted (more than 12 atoms)";
  }

  if (in.measure) {
    Json atoms = Json::array();
    for (const Event& e : measure_atoms(*in.measure)) atoms.push_back(event_to_json(e));
    payload["measure_atoms"] = std::move(atoms);
  }
  return payload;
}

CommandOutcome run_solve(const Json& input) {
  RankingInput in = parse_ranking_input(input);
  RepresentationResult result = solve_representation(in.assessment);
  Json payload;
  payload["representation"] = rep_result_to_json(result);
  return {std::move(payload), result.status == RepStatus::infeasible};
}

// Shared entry for the measure-consuming commands: a measure input is used
// as given, a ranking input is solved first.  The bool is the infeasible
// flag; when set, the payload already explains the failed solve.
std::pair<std::optional<SignedMeasure>, Json> obtain_measure(const Json& input) {
  RankingInput in = parse_ranking_input(input);
  if (in.measure) return {std::move(in.measure), Json()};
  RepresentationResult result = solve_representation(in.assessment);
  if (result.status == RepStatus::infeasible) {
    Json payload;
    payload["representation"] = rep_result_to_json(result);
    return {std::nullopt, std::move(payload)};
  }
  return {std::move(result.measure), Json()};
}

CommandOutcome run_decompose(const Json& input, const CommandOptions& options) {
  auto [maybe_mu, infeasible_payload] = obtain_measure(input);
  if (!maybe_mu) return {std::move(infeasible_payload), true};
  const SignedMeasure nu = normalize(*maybe_mu);
  const Assessment ranking = induced_assessment(nu);
  const JordanPair jp = jordan(nu);

  Json payload;
  payload["normalized"] = measure_to_json(nu);
  if (options.zero_policy == ZeroPolicy::enumerate_all) {
    Json pairs = Json::array();
    bool all_ok = true;
    for (const HahnPair& hp : hahn_all(nu)) {
      pairs.push_back(hahn_pair_to_json(hp));
      all_ok = all_ok && check_hahn(ranking, hp.pos, hp.neg).ok();
    }
    payload["hahn_all"] = std::move(pairs);
    payload["hahn_reports_all_ok"] = all_ok;
  } else {
    const HahnPair hp = hahn(nu, options.zero_policy);
    payload["hahn"] = hahn_pair_to_json(hp);
    payload["hahn_report"] = hahn_report_to_json(check_hahn(ranking, hp.pos, hp.neg));
  }
  payload["jordan"] = jordan_to_json(jp);
  payload["sup_formula_verified"] = verify_jordan_sup_formula(nu, jp);
  return {std::move(payload)};
}

CommandOutcome run_bayes(const Json& input, const CommandOptions& options) {
  auto [maybe_mu, infeasible_payload] = obtain_measure(input);
  if (!maybe_mu) return {std::move(infeasible_payload), true};
  const SignedMeasure nu = normalize(*maybe_mu);
  const Assessment ranking = induced_assessment(nu);
  const std::vector<Rat> ps =
      options.p_values.empty() ? std::vector<Rat>{Rat(1, 2)} : options.p_values;

  Json family = Json::array();
  for (const Rat& p : ps) {
    const BayesianRep rep = bayes_family(nu, p);
    const BayesianReport verdict = verify_bayesian(ranking, rep.mu0, rep.mu1, rep.guess);
    Json member;
    member["p"] = rational_to_json(p);
    member["representation"] = bayes_rep_to_json(rep);
    member["verification"] = bayes_report_to_json(verdict);
    family.push_back(std::move(member));
  }
  Json payload;
  payload["normalized"] = measure_to_json(nu);
  payload["family"] = std::move(family);
  return {std::move(payload)};
}

Json run_quotient(const Json& input) {
  RankingInput in = parse_ranking_input(input);
  const PurelyNullIdeal ideal = purely_null_ideal(in.assessment);
  const QuotientAlgebra q = null_quotient(in.assessment);

  Json payload;
  Json ideal_json;
  Json events = Json::array();
  for (const Event& e : ideal.events) events.push_back(event_to_json(e));
  ideal_json["purely_null_events"] = std::move(events);
  ideal_json["ideal_laws_hold"] = ideal.ideal_laws_hold();
  payload["ideal"] = std::move(ideal_json);
  payload["quotient"] = quotient_to_json(q);
  payload["reduced"] = assessment_to_json(q.as_assessment());
  return payload;
}

PolarGrid grid_for(const CommandOptions& options) {
  if (options.grid_path) return grid_from_json(load_json_file(*options.grid_path));
  return PolarGrid::default_grid();
}

Json measure_json_on_cells(const DiskMeasure& m) { return measure_to_json(export_to_algebra(m)); }

Json run_archery(const CommandOptions& options) {
  const PolarGrid grid = grid_for(options);
  const ArcherySuite suite = archery_measures(grid);

  Json payload;
  payload["grid"] = grid_to_json(grid);
  payload["bullseye"] = region_to_json(suite.target);

  Json measures;
  measures["lebesgue"] = measure_json_on_cells(suite.lebesgue);
  measures["bullseye_conditional"] = measure_json_on_cells(suite.bullseye_cond);
  measures["complement_conditional"] = measure_json_on_cells(suite.complement_cond);
  measures["very_high"] = measure_json_on_cells(suite.very_high);
  measures["high"] = measure_json_on_cells(suite.high);
  measures["low"] = measure_json_on_cells(suite.low);
  measures["very_low"] = measure_json_on_cells(suite.very_low);
  payload["measures"] = std::move(measures);

  Json bull;
  bull["μ_VH(B)"] = rational_to_json(suite.very_high.value(suite.target));
  bull["μ_H(B)"] = rational_to_json(suite.high.value(suite.target));
  bull["μ_L(B)"] = rational_to_json(suite.low.value(suite.target));
  bull["μ_VL(B)"] = rational_to_json(suite.very_low.value(suite.target));
  payload["bullseye_mass"] = std::move(bull);

  Json scores;
  scores["bullseye"] = rational_to_json(score(suite, suite.target));
  scores["complement"] = rational_to_json(score(suite, suite.target.complement()));
  scores["disk"] = rational_to_json(score(suite, Region::full(grid)));
  payload["score"] = std::move(scores);

  Json conditioning;
  conditioning["complement_conditional_equals_very_low"] =
      bayes_condition(suite.high, suite.target.complement()) == suite.very_low;
  conditioning["jeffrey_quarter_equals_low"] =
      jeffrey(suite.high, suite.target, Rat(1, 4)) == suite.low;
  payload["conditioning"] = std::move(conditioning);

  const SignedMeasure diff = normalize(export_to_algebra(score_measure(suite)));
  const SignedMeasure diff_low = normalize(export_to_algebra(suite.low - suite.high));
  payload["score_export"] = measure_to_json(diff);
  payload["scenario_equivalent"] = (diff == diff_low);

  const Assessment ranking = induced_assessment(diff);
  const JordanPair jp = jordan(diff);
  payload["jordan"] = jordan_to_json(jp);
  payload["sup_formula_verified"] = verify_jordan_sup_formula(diff, jp);

  Json family = Json::array();
  for (const Rat& p : {Rat(23, 100), Rat(73, 150)}) {
    const BayesianRep rep = bayes_family(diff, p);
    const BayesianReport verdict = verify_bayesian(ranking, rep.mu0, rep.mu1, rep.guess);
    Json member;
    member["p"] = rational_to_json(p);
    member["representation"] = bayes_rep_to_json(rep);
    member["verification"] = bayes_report_to_json(verdict);
    family.push_back(std::move(member));
  }
  payload["family"] = std::move(family);
  return payload;
}

// knife input: {"region": [[ring,sector],...], "v": "p/q"} plus an optional
// "measure" that is either the name of an archery measure or a list of cell
// masses in cell-index order.  The measure defaults to the uniform one.
DiskMeasure knife_measure(const PolarGrid& grid, const Json& input) {
  if (!input.contains("measure")) return archery_measures(grid).lebesgue;
  const Json& m = input.at("measure");
  if (m.is_string()) {
    const ArcherySuite suite = archery_measures(grid);
    const std::string name = m.get<std::string>();
    if (name == "lebesgue") return suite.lebesgue;
    if (name == "bullseye_conditional") return suite.bullseye_cond;
    if (name == "complement_conditional") return suite.complement_cond;
    if (name == "very_high") return suite.very_high;
    if (name == "high") return suite.high;
    if (name == "low") return suite.low;
    if (name == "very_low") return suite.very_low;
    throw ParseError("unknown measure name \"" + name + "\"");
  }
  if (m.is_array()) {
    if (m.size() != grid.cell_count()) {
      throw ParseError("measure mass list must have one entry per grid cell");
    }
    std::vector<Rat> masses;
    masses.reserve(m.size());
    for (const Json& entry : m) masses.push_back(rational_from_json(entry));
    return DiskMeasure(grid, std::move(masses));
  }
  throw ParseError("\"measure\" must be a name or a list of cell masses");
}

Json run_knife(const Json& input, const CommandOptions& options) {
  const PolarGrid grid = grid_for(options);
  if (!input.is_object() || !input.contains("region") || !input.contains("v")) {
    throw ParseError("knife input must be an object with \"region\" and \"v\"");
  }
  const Region base = region_from_json(grid, input.at("region"));
  const Rat v = rational_from_json(input.at("v"));
  const DiskMeasure m = knife_measure(grid, input);

  const SweptRegion swept = knife(m, base, v);
  Json payload;
  payload["swept"] = swept_to_json(swept);
  payload["mass"] = rational_to_json(swept_measure(m, swept));
  return payload;
}

}  // namespace

Json CommandReport::to_json() const {
  Json j;
  j["command"] = command;
  j["status"] = status;
  if (payload) j["payload"] = *payload;
  if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
  return j;
}

int CommandReport::exit_code() const {
  if (status == "ok") return 0;
  if (status == "infeasible") return 1;
  return 2;
}

bool command_needs_input(const std::string& command) { return command != "archery"; }

CommandReport run_command(const std::string& command, const std::string& input_path,
                          const CommandOptions& options) {
  CommandReport report;
  report.command = command;
  try {
    Json input;
    if (command_needs_input(command)) input = load_json_file(input_path);

    CommandOutcome outcome;
    if (command == "axioms") {
      outcome.payload = run_axioms(input, options);
    } else if (command == "solve") {
      outcome = run_solve(input);
    } else if (command == "decompose") {
      outcome = run_decompose(input, options);
    } else if (command == "bayes") {
      outcome = run_bayes(input, options);
    } else if (command == "quotient") {
      outcome.payload = run_quotient(input);
    } else if (command == "archery") {
      outcome.payload = run_archery(options);
    } else if (command == "knife") {
      outcome.payload = run_knife(input, options);
    } else {
      throw ParseError("unknown command \"" + command + "\"");
    }
    report.status = outcome.infeasible ? "infeasible" : "ok";
    report.payload = std::move(outcome.payload);
  } catch (const Error& e) {
    report.status = "error";
    report.payload.reset();
    report.diagnostics.push_back(e.what());
  } catch (const std::exception& e) {
    report.status = "error";
    report.payload.reset();
    report.diagnostics.push_back(std::string("unexpected failure: ") + e.what());
  }
  return report;
}

std::vector<CommandReport> run_batch(const std::string& command, const std::string& directory,
                                     const CommandOptions& options) {
  namespace fs = std::filesystem;
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      inputs.push_back(entry.path());
    }
  }
  std::sort(inputs.begin(), inputs.end());

  std::vector<CommandReport> reports;
  reports.reserve(inputs.size());
  for (const fs::path& path : inputs) {
    reports.push_back(run_command(command, path.string(), options));
  }
  return reports;
}

}  // namespace qprob
