#include <doctest.h>

#include <string>

#include "qprob/decompose.hpp"
#include "qprob/error.hpp"
#include "qprob/repsolve.hpp"
#include "support.hpp"

using namespace qprob;
using qprob::testing::rat;

namespace {

// The running example: one positive, one negative, one null atom, already
// normalized (peak event value 1).
SignedMeasure pnz() {
  return SignedMeasure(default_algebra(3), {rat(1), rat(-1), rat(0)});
}

bool mentions(const Error& e, const char* needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hahn splits by strict sign with the zero atom placed by policy") {
  SignedMeasure mu = pnz();
  HahnPair to_pos = hahn(mu, ZeroPolicy::to_pos);
  CHECK(to_pos.pos.bits() == 0b101);
  CHECK(to_pos.neg.bits() == 0b010);
  HahnPair to_neg = hahn(mu, ZeroPolicy::to_neg);
  CHECK(to_neg.pos.bits() == 0b001);
  CHECK(to_neg.neg.bits() == 0b110);
  CHECK_THROWS_AS(hahn(mu, ZeroPolicy::enumerate_all), StructuralError);
}

TEST_CASE("hahn_all enumerates every zero placement deterministically") {
  auto pairs = hahn_all(pnz());
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].pos.bits() == 0b001);
  CHECK(pairs[1].pos.bits() == 0b101);
  for (const HahnPair& hp : pairs) {
    CHECK(hp.pos.disjoint_with(hp.neg));
    CHECK(event_union(hp.pos, hp.neg).is_full());
    CHECK(check_hahn(induced_assessment(pnz()), hp.pos, hp.neg).ok());
  }

  std::vector<Rat> w(15, rat(0));
  w[0] = rat(1);
  w[1] = rat(-1);
  CHECK_THROWS_AS(hahn_all(SignedMeasure(default_algebra(15), w)), CapacityError);
}

TEST_CASE("jordan splits a balanced normalized measure into probability parts") {
  JordanPair jp = jordan(pnz());
  CHECK(jp.mu0.weights() == std::vector<Rat>{rat(0), rat(1), rat(0)});
  CHECK(jp.mu1.weights() == std::vector<Rat>{rat(1), rat(0), rat(0)});
  CHECK(jp.mu0.is_probability());
  CHECK(jp.mu1.is_probability());
  CHECK(verify_jordan_sup_formula(pnz(), jp));

  // swapped parts are not extremal for the original measure
  CHECK_FALSE(verify_jordan_sup_formula(pnz(), JordanPair{jp.mu1, jp.mu0}));
}

TEST_CASE("jordan preconditions: balance, then normalization") {
  Algebra alg = default_algebra(3);
  try {
    jordan(SignedMeasure(alg, {rat(1, 3), rat(1, 3), rat(1, 3)}));
    FAIL("expected ContractError");
  } catch (const ContractError& e) {
    CHECK(mentions(e, "absoluteness"));
  }
  CHECK_THROWS_AS(jordan(SignedMeasure(alg, {rat(1, 2), rat(-1, 2), rat(0)})), ContractError);
}

TEST_CASE("bayes_family mixes the Jordan parts and guesses the positive part") {
  SignedMeasure mu = pnz();
  BayesianRep rep = bayes_family(mu, rat(1, 2));
  CHECK(rep.guess.bits() == 0b101);
  CHECK(rep.p == rat(1, 2));
  CHECK(rep.mu0.weights() == std::vector<Rat>{rat(1, 2), rat(1, 2), rat(0)});
  CHECK(rep.mu1.weights() == std::vector<Rat>{rat(1), rat(0), rat(0)});
  CHECK(verify_bayesian(induced_assessment(mu), rep.mu0, rep.mu1, rep.guess).ok());

  BayesianRep lopsided = bayes_family(mu, rat(23, 100));
  CHECK(lopsided.mu0.value(lopsided.guess) == rat(23, 100));
  CHECK(verify_bayesian(induced_assessment(mu), lopsided.mu0, lopsided.mu1, lopsided.guess).ok());
}

TEST_CASE("bayes_family rejects boundary p with the interior-mass diagnostic") {
  for (const Rat& p : {rat(0), rat(1), rat(-1, 2), rat(3, 2)}) {
    try {
      bayes_family(pnz(), p);
      FAIL("expected ContractError for p = ", format_rational(p));
    } catch (const ContractError& e) {
      CHECK(mentions(e, "strictly between 0 and 1"));
    }
  }
}

TEST_CASE("a supplied guess must match the positive part in rank and both masses") {
  SignedMeasure mu = pnz();
  Algebra alg = mu.algebra();
  BayesianRep rep = bayes_family(mu, rat(1, 2), alg.event(0b001));
  CHECK(rep.guess.bits() == 0b001);
  CHECK(rep.mu0.value(rep.guess) == rat(1, 2));
  CHECK_THROWS_AS(bayes_family(mu, rat(1, 2), alg.event(0b010)), ContractError);
  CHECK_THROWS_AS(bayes_family(mu, rat(1, 2), alg.event(0b011)), ContractError);
}

TEST_CASE("verify_bayesian reports each failing clause with a witness") {
  SignedMeasure mu = pnz();
  Assessment a = induced_assessment(mu);
  JordanPair jp = jordan(mu);
  Algebra alg = mu.algebra();

  // degenerate guess: no interior mass, conditional undefined
  BayesianReport empty_guess = verify_bayesian(a, jp.mu0, jp.mu1, alg.empty_event());
  CHECK_FALSE(empty_guess.guess_mass_interior);
  CHECK_FALSE(empty_guess.conditional_formula);
  CHECK_FALSE(empty_guess.ok());

  // wrong posterior: the ranking clause must fail and name a witness pair
  BayesianReport wrong = verify_bayesian(a, jp.mu0, jp.mu0, alg.event(0b010));
  CHECK_FALSE(wrong.ranking_matches);
  CHECK(wrong.ranking_witness.has_value());

  // the real family member passes all three clauses
  BayesianRep rep = bayes_family(mu, rat(1, 3));
  BayesianReport good = verify_bayesian(a, rep.mu0, rep.mu1, rep.guess);
  CHECK(good.ok());
  CHECK_FALSE(good.ranking_witness.has_value());
  CHECK_FALSE(good.conditional_witness.has_value());
}

TEST_CASE("the exhaustive family scan certifies the mixture form") {
  SignedMeasure mu = pnz();
  BayesFamilyScan scan = bayes_family_complete(induced_assessment(mu), mu);
  CHECK(scan.ok());
  CHECK(scan.tuples_checked > 0);
  REQUIRE(scan.admissible_guesses.size() == 2);
  CHECK(scan.admissible_guesses[0].bits() == 0b001);
  CHECK(scan.admissible_guesses[1].bits() == 0b101);
}

TEST_CASE("family scan preconditions") {
  SignedMeasure mu = pnz();
  Assessment a = induced_assessment(mu);
  CHECK_THROWS_AS(bayes_family_complete(induced_assessment(qprob::testing::measure_of_weights(
                                            default_algebra(2), {rat(1), rat(-1)})),
                                        mu),
                  StructuralError);
  Algebra alg = default_algebra(3);
  SignedMeasure zero(alg, {rat(0), rat(0), rat(0)});
  CHECK_THROWS_AS(bayes_family_complete(induced_assessment(zero), zero), ContractError);
  Algebra big = default_algebra(5);
  SignedMeasure wide(big, {rat(2), rat(-1), rat(-1), rat(0), rat(0)});
  CHECK_THROWS_AS(bayes_family_complete(induced_assessment(wide), normalize(wide)),
                  CapacityError);
}

TEST_CASE("default p grid is the nine tenths plus the two archer values") {
  auto grid = default_p_grid();
  REQUIRE(grid.size() == 11);
  CHECK(grid[0] == rat(1, 10));
  CHECK(grid[1] == rat(1, 5));
  CHECK(format_rational(grid[1]) == "1/5");
  CHECK(grid[9] == rat(23, 100));
  CHECK(grid[10] == rat(73, 150));
  for (const Rat& p : grid) CHECK((p > 0 && p < 1));
}

TEST_CASE("radon_nikodym_density reproduces mu1 from mu0") {
  Algebra alg = default_algebra(3);
  SignedMeasure mu0(alg, {rat(1, 2), rat(1, 2), rat(0)});
  SignedMeasure mu1(alg, {rat(1), rat(0), rat(0)});
  auto f = radon_nikodym_density(mu0, mu1);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == rat(2));
  CHECK(f[1] == rat(0));
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    Rat sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (bits >> i & 1) sum += f[i] * mu0.weights()[i];
    }
    CHECK(sum == mu1.value(alg.event(bits)));
  }

  try {
    radon_nikodym_density(mu0, SignedMeasure(alg, {rat(0), rat(0), rat(1)}));
    FAIL("expected ContractError");
  } catch (const ContractError& e) {
    CHECK(mentions(e, "a3"));
  }
}

TEST_CASE("annulment search finds the smallest exact cancelling subevent") {
  Algebra alg = default_algebra(4);
  SignedMeasure mu(alg, {rat(1, 2), rat(1, 4), rat(-1, 4), rat(-1, 2)});
  Event a_plus = alg.event(0b0011);
  Event a_minus = alg.event(0b0100);

  auto found = annulment_search(mu, a_plus, a_minus);
  REQUIRE(found.has_value());
  CHECK(found->bits() == 0b0010);
  CHECK(mu.value(event_union(*found, a_minus)) == 0);

  // target that no subset sum can hit
  SignedMeasure odd(alg, {rat(1, 2), rat(1, 4), rat(-1, 8), rat(-5, 8)});
  CHECK_FALSE(annulment_search(odd, a_plus, a_minus).has_value());
}

TEST_CASE("annulment search validates the construction hypotheses") {
  Algebra alg = default_algebra(4);
  SignedMeasure mu(alg, {rat(1, 2), rat(1, 4), rat(-1, 4), rat(-1, 2)});
  // overlapping parts
  CHECK_THROWS_AS(annulment_search(mu, alg.event(0b0011), alg.event(0b0001)), ContractError);
  // positive part hiding a negative subevent
  CHECK_THROWS_AS(annulment_search(mu, alg.event(0b0101), alg.event(0b1000)), ContractError);
  // union with negative total
  CHECK_THROWS_AS(annulment_search(mu, alg.event(0b0010), alg.event(0b1000)), ContractError);
}

TEST_CASE("random balanced measures: every Hahn split passes the ordinal test") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Algebra alg = default_algebra(3 + trial % 3);
    SignedMeasure mu =
        normalize(qprob::testing::random_balanced_measure(rng, alg, trial % 3 == 0));
    Assessment a = induced_assessment(mu);
    JordanPair jp = jordan(mu);
    CHECK(verify_jordan_sup_formula(mu, jp));
    CHECK((jp.mu1 - jp.mu0) == mu);
    for (const HahnPair& hp : hahn_all(mu)) {
      CHECK(check_hahn(a, hp.pos, hp.neg).ok());
    }
  }
}
