#pragma once

#include <optional>
#include <vector>

#include "qprob/assessment.hpp"
#include "qprob/linear.hpp"
#include "qprob/measure.hpp"

namespace qprob {

enum class RepStatus { unique_up_to_scaling, feasible_non_unique, infeasible };

// Outcome of solve_representation.  When feasible, `measure` induces exactly
// the input ranking and is normalized (max |μ(A)| = 1) — except for the
// all-tied ranking, whose only representation is the zero measure and is
// returned as such.  `solution_dimension` is the dimension of the solution
// space of the equality constraints alone (within-level equalities plus the
// empty-event anchor); the representation is unique up to positive scaling
// exactly when it is 1.  `class_values` lists the represented value of each
// rank level, ascending.
struct RepresentationResult {
  RepStatus status = RepStatus::infeasible;
  std::optional<SignedMeasure> measure;
  std::size_t solution_dimension = 0;
  std::optional<std::vector<Rat>> class_values;
};

struct SolveOptions {
  // Eliminate variables in reverse order.  The feasibility verdict and the
  // solution dimension are invariants; the particular feasible point found
  // may differ unless the representation is unique.
  bool reverse_pivot_order = false;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
};

// Searches for a signed measure inducing the given ranking.  One value
// variable per rank level and one weight per atom; every event constrains
// its atom-weight sum to its level's value, consecutive level values are
// separated by unit gaps (strictness is scale-invariant, so a unit gap loses
// no generality), and the empty event's level is anchored at 0.  Equalities
// are eliminated by exact Gaussian reduction and the gap system is decided
// by exact simplex.
RepresentationResult solve_representation(const Assessment& a, const SolveOptions& options = {});

// Rescales so that max over events of |μ(A)| = 1; the maximum equals
// max(sum of positive weights, −sum of negative weights).  ContractError on
// the zero measure.
SignedMeasure normalize(const SignedMeasure& mu);

// Events of nonzero measure that no subevent splits: every B ⊆ A has
// μ(B) ∈ {0, μ(A)}.  Canonical event order.
std::vector<Event> measure_atoms(const SignedMeasure& mu,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace qprob
