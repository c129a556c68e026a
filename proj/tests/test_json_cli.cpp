#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "qprob/commands.hpp"
#include "qprob/error.hpp"
#include "qprob/repsolve.hpp"
#include "support.hpp"

using namespace qprob;
using qprob::testing::rat;

namespace {

namespace fs = std::filesystem;

// Each test writes its inputs into a private scratch directory.
fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qprob_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_input(const std::string& name, const Json& content) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << content.dump(2) << "\n";
  return path.string();
}

Json measure_json(const std::vector<std::string>& atoms, const std::vector<std::string>& weights) {
  Json w = Json::object();
  for (std::size_t i = 0; i < atoms.size(); ++i) w[atoms[i]] = weights[i];
  return Json{{"weights", std::move(w)}};
}

}  // namespace

TEST_CASE("rational JSON accepts strings and integers") {
  CHECK(rational_from_json(Json("3/4")) == rat(3, 4));
  CHECK(rational_from_json(Json(-7)) == rat(-7));
  CHECK(rational_to_json(rat(-7, 2)) == Json("-7/2"));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}

TEST_CASE("algebra, event, assessment, and measure round-trip through JSON") {
  Algebra alg({"rain", "snow", "sun"});
  CHECK(algebra_from_json(algebra_to_json(alg)) == alg);

  Event e = alg.event(0b101);
  CHECK(event_from_json(alg, event_to_json(e)) == e);
  CHECK(event_to_json(e) == Json::array({"rain", "sun"}));

  SignedMeasure mu(alg, {rat(1, 2), rat(-1, 3), rat(0)});
  SignedMeasure mu2 = measure_from_json(measure_to_json(mu));
  CHECK(mu2 == mu);

  Assessment a = induced_assessment(mu);
  CHECK(assessment_from_json(assessment_to_json(a)) == a);
}

TEST_CASE("measure JSON without an algebra member takes atoms from key order") {
  Json j = measure_json({"x", "y"}, {"2/4", "-1"});
  SignedMeasure mu = measure_from_json(j);
  CHECK(mu.algebra().atom_labels() == std::vector<std::string>{"x", "y"});
  CHECK(mu.weights() == std::vector<Rat>{rat(1, 2), rat(-1)});
}

TEST_CASE("grid, region, and swept region round-trip through JSON") {
  PolarGrid g({rat(0), rat(1, 4), rat(1, 2), rat(1)}, 3);
  PolarGrid g2 = grid_from_json(grid_to_json(g));
  CHECK(g2 == g);

  Region r = Region::of_cells(g, {{0, 2}, {2, 0}});
  CHECK(region_from_json(g, region_to_json(r)) == r);

  Json s = swept_to_json(SweptRegion{r, rat(5, 8)});
  CHECK(s.at("angle") == Json("5/8"));
  CHECK(region_from_json(g, s.at("base")) == r);
}

TEST_CASE("representation results serialize status and witnesses") {
  Algebra alg = default_algebra(2);
  RepresentationResult unique =
      solve_representation(induced_assessment(SignedMeasure(alg, {rat(1), rat(1)})));
  Json ju = rep_result_to_json(unique);
  CHECK(ju.at("status") == Json("unique-up-to-scaling"));
  CHECK(ju.contains("measure"));
  CHECK(ju.contains("class_values"));

  RepresentationResult infeasible =
      solve_representation(Assessment::from_ranks(alg, {0, 0, 0, 1}));
  Json ji = rep_result_to_json(infeasible);
  CHECK(ji.at("status") == Json("infeasible"));
  CHECK_FALSE(ji.contains("measure"));
}

TEST_CASE("axioms command reports all five checkers and the sign table") {
  const std::string path =
      write_input("axioms_measure.json", measure_json({"a", "b"}, {"1/2", "-1/2"}));
  CommandReport report = run_command("axioms", path, {});
  REQUIRE(report.status == "ok");
  CHECK(report.exit_code() == 0);
  const Json& p = *report.payload;
  CHECK(p.at("separability").at("holds") == Json(true));
  CHECK(p.at("monotonicity").at("holds") == Json(false));
  CHECK(p.at("non_degenerate") == Json(true));
  CHECK(p.at("absoluteness") == Json(true));
  CHECK(p.at("continuity").at("holds") == Json(true));
  CHECK(p.at("sign_table").size() == 4);
  CHECK(p.contains("measure_atoms"));
}

TEST_CASE("solve command relays the feasibility verdict in the exit code") {
  Algebra alg = default_algebra(5);
  Assessment wide =
      induced_assessment(SignedMeasure(alg, {rat(1), rat(1), rat(3), rat(3), rat(-3)}));
  const std::string ok_path = write_input("solve_ok.json", assessment_to_json(wide));
  CommandReport ok = run_command("solve", ok_path, {});
  REQUIRE(ok.status == "ok");
  CHECK(ok.payload->at("representation").at("status") == Json("feasible-non-unique"));

  Algebra two = default_algebra(2);
  const std::string bad_path = write_input(
      "solve_bad.json", assessment_to_json(Assessment::from_ranks(two, {0, 0, 0, 1})));
  CommandReport bad = run_command("solve", bad_path, {});
  CHECK(bad.status == "infeasible");
  CHECK(bad.exit_code() == 1);
  CHECK(bad.payload->at("representation").at("status") == Json("infeasible"));
  CHECK(bad.diagnostics.empty());
}

TEST_CASE("decompose command honors the zero policy flag") {
  const std::string path = write_input(
      "decompose.json", measure_json({"a", "b", "c"}, {"1", "-1", "0"}));
  CommandReport single = run_command("decompose", path, {});
  REQUIRE(single.status == "ok");
  CHECK(single.payload->contains("hahn"));
  CHECK(single.payload->at("hahn_report").at("ok") == Json(true));
  CHECK(single.payload->at("sup_formula_verified") == Json(true));

  CommandOptions enumerate;
  enumerate.zero_policy = ZeroPolicy::enumerate_all;
  CommandReport all = run_command("decompose", path, enumerate);
  REQUIRE(all.status == "ok");
  CHECK(all.payload->at("hahn_all").size() == 2);
  CHECK(all.payload->at("hahn_reports_all_ok") == Json(true));
}

TEST_CASE("error reports carry diagnostics and no payload") {
  const std::string path = write_input(
      "decompose_unbalanced.json", measure_json({"a", "b"}, {"1", "1"}));
  CommandReport report = run_command("decompose", path, {});
  CHECK(report.status == "error");
  CHECK(report.exit_code() == 2);
  CHECK_FALSE(report.payload.has_value());
  REQUIRE(!report.diagnostics.empty());
  CHECK(report.diagnostics[0].find("absoluteness") != std::string::npos);

  CommandReport missing = run_command("axioms", (scratch_dir() / "absent.json").string(), {});
  CHECK(missing.status == "error");
  CommandReport unknown = run_command("frobnicate", "", {});
  CHECK(unknown.status == "error");
}

TEST_CASE("bayes command rejects boundary p with the interior-mass diagnostic") {
  const std::string path =
      write_input("bayes.json", measure_json({"a", "b", "c"}, {"1", "-1", "0"}));

  CommandOptions zero_p;
  zero_p.p_values = {rat(0)};
  CommandReport bad = run_command("bayes", path, zero_p);
  CHECK(bad.status == "error");
  REQUIRE(!bad.diagnostics.empty());
  CHECK(bad.diagnostics[0].find("strictly between 0 and 1") != std::string::npos);

  CommandReport good = run_command("bayes", path, {});
  REQUIRE(good.status == "ok");
  REQUIRE(good.payload->at("family").size() == 1);
  const Json& member = good.payload->at("family").at(0);
  CHECK(member.at("p") == Json("1/2"));
  CHECK(member.at("verification").at("ok") == Json(true));
}

TEST_CASE("quotient command reports classes, ideal, and the reduced ranking") {
  const std::string path = write_input(
      "quotient.json", measure_json({"a", "b", "c"}, {"1/2", "0", "-1/2"}));
  CommandReport report = run_command("quotient", path, {});
  REQUIRE(report.status == "ok");
  const Json& p = *report.payload;
  CHECK(p.at("ideal").at("ideal_laws_hold") == Json(true));
  CHECK(p.at("ideal").at("purely_null_events").size() == 2);
  CHECK(p.at("quotient").at("classes").size() == 4);
  CHECK(p.at("reduced").at("algebra").at("atoms") == Json::array({"a", "c"}));
}

TEST_CASE("knife command sweeps a named measure to the requested mass") {
  Json input;
  input["region"] = Json::array({Json::array({1, 0}), Json::array({1, 1})});
  input["v"] = "1/10";  // the region holds 23/200 under μ_H
  input["measure"] = "high";
  const std::string path = write_input("knife.json", input);
  CommandReport report = run_command("knife", path, {});
  REQUIRE(report.status == "ok");
  CHECK(report.payload->at("mass") == Json("1/10"));

  Json bad = input;
  bad["v"] = "2";
  CommandReport out_of_range = run_command("knife", write_input("knife_bad.json", bad), {});
  CHECK(out_of_range.status == "error");
}

TEST_CASE("archery command is byte-identical across runs") {
  CommandReport first = run_command("archery", "", {});
  CommandReport second = run_command("archery", "", {});
  REQUIRE(first.status == "ok");
  CHECK(first.to_json().dump() == second.to_json().dump());
  CHECK(first.payload->at("bullseye_mass").at("μ_H(B)") == Json("77/100"));
  CHECK(first.payload->at("scenario_equivalent") == Json(true));
}

TEST_CASE("batch mode runs every JSON file in name order") {
  const fs::path dir = scratch_dir() / "batch";
  fs::create_directories(dir);
  std::ofstream(dir / "b_second.json") << measure_json({"a", "b"}, {"1", "-1"}).dump();
  std::ofstream(dir / "a_first.json") << measure_json({"x", "y", "z"}, {"1", "0", "-1"}).dump();
  std::ofstream(dir / "ignored.txt") << "not json";

  auto reports = run_batch("axioms", dir.string(), {});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].status == "ok");
  CHECK(reports[1].status == "ok");
  CHECK(reports[0].payload->at("algebra").at("atoms").size() == 3);
  CHECK(reports[1].payload->at("algebra").at("atoms").size() == 2);
}
