#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qprob/assessment.hpp"
#include "qprob/measure.hpp"

namespace qprob {

// A candidate splitting of the state space into a non-negative part and a
// non-positive part for some generating measure.
struct HahnPair {
  Event pos;
  Event neg;
};

// Where atoms of weight exactly zero are placed.
enum class ZeroPolicy { to_pos, to_neg, enumerate_all };

// pos = strictly positive atoms plus the zero atoms (to_pos) or without them
// (to_neg); neg = the rest.  Use hahn_all for the enumerate_all policy.
HahnPair hahn(const SignedMeasure& mu, ZeroPolicy policy = ZeroPolicy::to_pos);

// Every splitting of the zero-weight atoms, 2^z pairs in deterministic
// order.  CapacityError when more than `max_zero_atoms` atoms weigh zero.
std::vector<HahnPair> hahn_all(const SignedMeasure& mu, std::size_t max_zero_atoms = 12);

// μ = mu1 − mu0 with mu0, mu1 probability measures of disjoint support.
struct JordanPair {
  SignedMeasure mu0;
  SignedMeasure mu1;
};

// Splits a normalized measure of total zero into its negative and positive
// parts: mu0 weighs atom i at max(0, −w_i), mu1 at max(0, w_i).  Both totals
// are forced to 1.  ContractError when the total is nonzero (absoluteness)
// or the measure is not normalized.
JordanPair jordan(const SignedMeasure& mu);

// Brute-force check of the extremal characterization: for every event A,
// mu1(A) is the greatest μ(B) over subevents B ⊆ A and mu0(A) the negated
// least.
bool verify_jordan_sup_formula(const SignedMeasure& mu, const JordanPair& jp,
                               std::size_t cap = kDefaultEnumerationCap);

// (prior, posterior, clue guess): the ranking is induced by mu1 − mu0 and
// mu1 is mu0 conditioned on the guess, whose prior mass is p ∈ (0,1).
struct BayesianRep {
  SignedMeasure mu0;
  SignedMeasure mu1;
  Event guess;
  Rat p;
};

// Builds the representation family member at parameter p: prior is the
// mixture (1−p)·mu0_J + p·mu1_J of the Jordan parts, posterior is mu1_J.
// The guess defaults to the to_pos Hahn positive part; a supplied guess must
// be equivalent to it in ranking, prior mass, and posterior mass.
// ContractError on p outside (0,1) or on an inequivalent guess.
BayesianRep bayes_family(const SignedMeasure& mu, const Rat& p,
                         const std::optional<Event>& guess = std::nullopt);

// Clause-by-clause verdict on a candidate Bayesian representation.
struct BayesianReport {
  bool ranking_matches = false;  // a orders events exactly as mu1 − mu0 does
  std::optional<std::pair<Event, Event>> ranking_witness;
  bool guess_mass_interior = false;  // mu0(guess) strictly between 0 and 1
  bool conditional_formula = false;  // mu1(A)·mu0(guess) = mu0(A ∩ guess) for all A;
                                     // reported false when mu0(guess) = 0 (undefined)
  std::optional<Event> conditional_witness;
  bool ok() const { return ranking_matches && guess_mass_interior && conditional_formula; }
};

BayesianReport verify_bayesian(const Assessment& a, const SignedMeasure& mu0,
                               const SignedMeasure& mu1, const Event& guess,
                               std::size_t cap = kDefaultEnumerationCap);

// Exhaustive scan over every guess and a fixed rational p grid: confirms the
// verifying tuples are exactly those predicted by the mixture form plus the
// three guess-equivalence clauses, that all of them share one posterior, and
// that systematically perturbed out-of-form tuples never verify.
struct BayesFamilyScan {
  std::vector<Event> admissible_guesses;  // canonical order
  bool posterior_unique = true;
  bool matches_mixture_form = true;
  bool rejects_perturbed = true;
  std::size_t tuples_checked = 0;
  bool ok() const { return posterior_unique && matches_mixture_form && rejects_perturbed; }
};

BayesFamilyScan bayes_family_complete(const Assessment& a, const SignedMeasure& mu,
                                      std::size_t max_atoms = 4);

// {1/10, ..., 9/10} plus 23/100 and 73/150.
std::vector<Rat> default_p_grid();

// Atomwise density f with mu1(A) = Σ_{i∈A} f_i·mu0_i for every A.
// ContractError naming the first atom where absolute continuity fails
// (mu0 zero but mu1 not).
std::vector<Rat> radon_nikodym_density(const SignedMeasure& mu0, const SignedMeasure& mu1);

// A subevent B of a_plus with μ(B) = −μ(a_minus), so μ(B ∪ a_minus) = 0;
// smallest bitmask among solutions; absent when no subset of a_plus's atoms
// hits the target exactly.  Preconditions (ContractError): a_plus and
// a_minus disjoint, a_plus purely non-negative and a_minus purely
// non-positive under μ's induced ranking, μ(a_plus ∪ a_minus) ≥ 0.
std::optional<Event> annulment_search(const SignedMeasure& mu, const Event& a_plus,
                                      const Event& a_minus,
                                      std::size_t cap = kDefaultEnumerationCap);

}  // namespace qprob
