#include "qprob/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qprob/error.hpp"

namespace qprob {

namespace {

const Json& expect_member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

void expect_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
}

}  // namespace

Json algebra_to_json(const Algebra& algebra) {
  return Json{{"atoms", algebra.atom_labels()}};
}

Algebra algebra_from_json(const Json& j) {
  const Json& atoms = expect_member(j, "atoms", "algebra");
  expect_array(atoms, "algebra atoms");
  std::vector<std::string> labels;
  for (const Json& atom : atoms) {
    if (!atom.is_string()) throw ParseError("algebra atoms: labels must be strings");
    labels.push_back(atom.get<std::string>());
  }
  return Algebra(std::move(labels));
}

Json event_to_json(const Event& event) { return Json(event.labels()); }

Event event_from_json(const Algebra& algebra, const Json& j) {
  expect_array(j, "event");
  std::vector<std::string> labels;
  for (const Json& label : j) {
    if (!label.is_string()) throw ParseError("event: atom labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return algebra.event_of_labels(labels);
}

Json assessment_to_json(const Assessment& a) {
  Json levels = Json::array();
  for (const std::vector<Event>& level : a.levels()) {
    Json entries = Json::array();
    for (const Event& event : level) entries.push_back(event_to_json(event));
    levels.push_back(std::move(entries));
  }
  return Json{{"algebra", algebra_to_json(a.algebra())}, {"levels", std::move(levels)}};
}

Assessment assessment_from_json(const Json& j) {
  const Algebra algebra = algebra_from_json(expect_member(j, "algebra", "assessment"));
  const Json& levels_json = expect_member(j, "levels", "assessment");
  expect_array(levels_json, "assessment levels");
  std::vector<std::vector<Event>> levels;
  for (const Json& level_json : levels_json) {
    expect_array(level_json, "assessment level");
    std::vector<Event> level;
    for (const Json& event_json : level_json) level.push_back(event_from_json(algebra, event_json));
    levels.push_back(std::move(level));
  }
  return Assessment::from_levels(algebra, levels);
}

Json rational_to_json(const Rat& value) { return Json(format_rational(value)); }

Rat rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError("rational: expected \"p/q\" string or integer, got " + j.dump());
}

Json measure_to_json(const SignedMeasure& mu) {
  Json weights = Json::object();
  for (std::size_t i = 0; i < mu.algebra().atom_count(); ++i) {
    weights[mu.algebra().atom_label(i)] = format_rational(mu.weight(i));
  }
  return Json{{"weights", std::move(weights)}};
}

SignedMeasure measure_from_json(const Json& j) {
  const Json& weights_json = expect_member(j, "weights", "measure");
  if (!weights_json.is_object()) throw ParseError("measure weights: expected a JSON object");
  if (j.contains("algebra")) {
    const Algebra algebra = algebra_from_json(j.at("algebra"));
    std::vector<Rat> weights(algebra.atom_count(), Rat(0));
    for (const auto& [label, value] : weights_json.items()) {
      weights[algebra.atom_index(label)] = rational_from_json(value);
    }
    return SignedMeasure(algebra, std::move(weights));
  }
  std::vector<std::string> labels;
  std::vector<Rat> weights;
  for (const auto& [label, value] : weights_json.items()) {
    labels.push_back(label);
    weights.push_back(rational_from_json(value));
  }
  return SignedMeasure(Algebra(std::move(labels)), std::move(weights));
}

Json rep_result_to_json(const RepresentationResult& result) {
  Json j = Json::object();
  switch (result.status) {
    case RepStatus::unique_up_to_scaling: j["status"] = "unique-up-to-scaling"; break;
    case RepStatus::feasible_non_unique: j["status"] = "feasible-non-unique"; break;
    case RepStatus::infeasible: j["status"] = "infeasible"; break;
  }
  j["solution_dimension"] = result.solution_dimension;
  if (result.measure.has_value()) j["measure"] = measure_to_json(*result.measure);
  if (result.class_values.has_value()) {
    Json values = Json::array();
    for (const Rat& v : *result.class_values) values.push_back(format_rational(v));
    j["class_values"] = std::move(values);
  }
  return j;
}

Json sign_profile_to_json(const SignProfile& profile) {
  const char* base = profile.base == SignBase::positive  ? "positive"
                     : profile.base == SignBase::negative ? "negative"
                                                          : "null";
  return Json{{"base", base},
              {"purely_non_negative", profile.purely_non_negative},
              {"purely_null", profile.purely_null},
              {"purely_non_positive", profile.purely_non_positive},
              {"thoroughly_positive", profile.thoroughly_positive},
              {"thoroughly_negative", profile.thoroughly_negative}};
}

Json hahn_pair_to_json(const HahnPair& pair) {
  return Json{{"pos", event_to_json(pair.pos)}, {"neg", event_to_json(pair.neg)}};
}

Json hahn_report_to_json(const HahnReport& report) {
  Json j = Json{{"ok", report.ok()},
                {"extremal", report.extremal},
                {"partitions", report.partitions},
                {"pos_subevents_non_negative", report.pos_subevents_non_negative},
                {"neg_subevents_non_positive", report.neg_subevents_non_positive}};
  if (report.extremal_witness) j["extremal_witness"] = event_to_json(*report.extremal_witness);
  if (report.pos_witness) j["pos_witness"] = event_to_json(*report.pos_witness);
  if (report.neg_witness) j["neg_witness"] = event_to_json(*report.neg_witness);
  return j;
}

Json jordan_to_json(const JordanPair& jp) {
  return Json{{"mu0", measure_to_json(jp.mu0)}, {"mu1", measure_to_json(jp.mu1)}};
}

Json bayes_rep_to_json(const BayesianRep& rep) {
  return Json{{"mu0", measure_to_json(rep.mu0)},
              {"mu1", measure_to_json(rep.mu1)},
              {"guess", event_to_json(rep.guess)},
              {"p", format_rational(rep.p)}};
}

Json bayes_report_to_json(const BayesianReport& report) {
  Json j = Json{{"ok", report.ok()},
                {"ranking_matches", report.ranking_matches},
                {"guess_mass_interior", report.guess_mass_interior},
                {"conditional_formula", report.conditional_formula}};
  if (report.ranking_witness) {
    j["ranking_witness"] = Json::array({event_to_json(report.ranking_witness->first),
                                        event_to_json(report.ranking_witness->second)});
  }
  if (report.conditional_witness) {
    j["conditional_witness"] = event_to_json(*report.conditional_witness);
  }
  return j;
}

Json separability_to_json(const ViolationList<SeparabilityViolation>& v) {
  Json items = Json::array();
  for (const SeparabilityViolation& item : v.items) {
    items.push_back(Json{{"a", event_to_json(item.a)},
                         {"b", event_to_json(item.b)},
                         {"c", event_to_json(item.c)}});
  }
  return Json{{"holds", v.clean()}, {"total", v.total}, {"violations", std::move(items)}};
}

Json monotonicity_to_json(const ViolationList<MonotonicityViolation>& v) {
  Json items = Json::array();
  for (const MonotonicityViolation& item : v.items) {
    items.push_back(Json{{"small", event_to_json(item.small)},
                         {"large", event_to_json(item.large)}});
  }
  return Json{{"holds", v.clean()}, {"total", v.total}, {"violations", std::move(items)}};
}

Json quotient_to_json(const QuotientAlgebra& q) {
  Json classes = Json::array();
  Json levels = Json::array();
  for (std::size_t cls = 0; cls < q.class_count(); ++cls) {
    Json members = Json::array();
    for (const Event& member : q.classes()[cls]) members.push_back(event_to_json(member));
    classes.push_back(std::move(members));
    levels.push_back(q.class_rank(cls));
  }
  return Json{{"classes", std::move(classes)},
              {"levels", std::move(levels)},
              {"purely_null_class", q.purely_null_class()},
              {"null_part", event_to_json(q.null_part())}};
}

Json grid_to_json(const PolarGrid& grid) {
  Json bounds = Json::array();
  for (const Rat& b : grid.ring_bounds_sq()) bounds.push_back(format_rational(b));
  return Json{{"ring_bounds_sq", std::move(bounds)}, {"n_sectors", grid.sector_count()}};
}

PolarGrid grid_from_json(const Json& j) {
  const Json& bounds_json = expect_member(j, "ring_bounds_sq", "grid");
  expect_array(bounds_json, "grid ring bounds");
  std::vector<Rat> bounds;
  for (const Json& b : bounds_json) bounds.push_back(rational_from_json(b));
  const Json& sectors = expect_member(j, "n_sectors", "grid");
  if (!sectors.is_number_unsigned() || sectors.get<std::uint64_t>() == 0) {
    throw ParseError("grid: \"n_sectors\" must be a positive integer");
  }
  return PolarGrid(std::move(bounds), sectors.get<std::size_t>());
}

Json region_to_json(const Region& r) {
  Json cells = Json::array();
  for (std::size_t cell : r.cell_indices()) {
    const auto [ring, sector] = r.grid().cell_coords(cell);
    cells.push_back(Json::array({ring, sector}));
  }
  return cells;
}

Region region_from_json(const PolarGrid& grid, const Json& j) {
  expect_array(j, "region");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (const Json& cell : j) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_unsigned() ||
        !cell[1].is_number_unsigned()) {
      throw ParseError("region: cells must be [ring, sector] pairs of nonnegative integers");
    }
    cells.emplace_back(cell[0].get<std::size_t>(), cell[1].get<std::size_t>());
  }
  return Region::of_cells(grid, cells);
}

Json swept_to_json(const SweptRegion& s) {
  return Json{{"base", region_to_json(s.base)}, {"angle", format_rational(s.angle)}};
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(origin + ": invalid JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

}  // namespace qprob
