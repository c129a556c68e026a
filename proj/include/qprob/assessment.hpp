#pragma once

#include <optional>
#include <vector>

#include "qprob/measure.hpp"

namespace qprob {

// A total preorder on all events of a finite algebra, stored as a rank table:
// rank(A) ∈ 0..K−1, higher rank = more corroborated, every level nonempty.
// "A at_least B" (written A ≿ B elsewhere) means rank(A) ≥ rank(B), so the
// relation is complete and transitive by construction.
class Assessment {
public:
  // Levels listed from lowest to highest; together they must partition the
  // event set.  Throws StructuralError otherwise.
  static Assessment from_levels(const Algebra& algebra,
                                const std::vector<std::vector<Event>>& levels_low_to_high);

  // One integer per event, indexed by event bitmask.  Ranks are compressed
  // to contiguous 0..K−1 preserving order.
  static Assessment from_ranks(const Algebra& algebra, const std::vector<int>& rank_by_bits);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t level_count() const noexcept { return level_count_; }

  int rank(const Event& event) const;
  int rank_of_bits(std::uint32_t bits) const;

  bool at_least(const Event& a, const Event& b) const;        // a ≿ b
  bool strictly_above(const Event& a, const Event& b) const;  // a ≻ b
  bool equivalent(const Event& a, const Event& b) const;      // a ∼ b

  // Events grouped by level, lowest first, canonical order inside each level.
  std::vector<std::vector<Event>> levels() const;

  friend bool operator==(const Assessment& a, const Assessment& b) {
    return a.algebra_ == b.algebra_ && a.rank_ == b.rank_;
  }
  friend bool operator!=(const Assessment& a, const Assessment& b) { return !(a == b); }

private:
  Assessment(Algebra algebra, std::vector<int> rank, std::size_t level_count)
      : algebra_(std::move(algebra)), rank_(std::move(rank)), level_count_(level_count) {}

  Algebra algebra_;
  std::vector<int> rank_;  // indexed by event bitmask
  std::size_t level_count_;
};

// Ranking with A ≿ B iff mu(A) ≥ mu(B); levels are the distinct measure
// values in ascending order.  Always separable (additivity).
Assessment induced_assessment(const SignedMeasure& mu, std::size_t cap = kDefaultEnumerationCap);

inline constexpr std::size_t kDefaultViolationLimit = 100;

// Checker output: items are reported in deterministic (canonical event)
// order and truncated at the configured limit; total counts everything.
template <typename Item>
struct ViolationList {
  std::vector<Item> items;
  std::size_t total = 0;
  bool clean() const { return total == 0; }
};

// The pair (a,b) compares differently from (a∪c, b∪c) even though c is
// disjoint from both.
struct SeparabilityViolation {
  Event a, b, c;
};

// small ⊆ large and yet small ranks strictly above large.
struct MonotonicityViolation {
  Event small, large;
};

ViolationList<SeparabilityViolation> check_separability(
    const Assessment& a, std::size_t limit = kDefaultViolationLimit);

// Early-exit yes/no version of check_separability, for search loops.
bool separability_holds(const Assessment& a);

ViolationList<MonotonicityViolation> check_monotonicity(
    const Assessment& a, std::size_t limit = kDefaultViolationLimit);

bool check_nondegeneracy(const Assessment& a);  // true iff K ≥ 2
bool check_absoluteness(const Assessment& a);   // true iff S ∼ ∅

enum class SignBase { negative, null, positive };

// How an event compares to ∅, plus exhaustive-subevent refinements.
struct SignProfile {
  SignBase base = SignBase::null;
  bool purely_non_negative = false;  // every subevent ≿ ∅
  bool purely_null = false;          // every subevent ∼ ∅
  bool purely_non_positive = false;  // every subevent ≾ ∅
  bool thoroughly_positive = false;  // base positive and purely non-negative
  bool thoroughly_negative = false;  // base negative and purely non-positive
};

SignProfile sign_classify(const Assessment& a, const Event& e);

// Clause-by-clause result of the ordinal Hahn test.  A failing clause
// carries a witness event where available.
struct HahnReport {
  bool extremal = false;    // pos ≿ every event and every event ≿ neg
  bool partitions = false;  // pos, neg disjoint with union = S
  bool pos_subevents_non_negative = false;
  bool neg_subevents_non_positive = false;
  std::optional<Event> extremal_witness;  // event above pos or below neg
  std::optional<Event> pos_witness;       // negative subevent of pos
  std::optional<Event> neg_witness;       // positive subevent of neg
  bool ok() const {
    return extremal && partitions && pos_subevents_non_negative && neg_subevents_non_positive;
  }
};

HahnReport check_hahn(const Assessment& a, const Event& pos, const Event& neg);

std::vector<Event> top_ranked(const Assessment& a);
std::vector<Event> bottom_ranked(const Assessment& a);

// True iff the symmetric difference of x and y is purely null.
bool approx_equivalent(const Assessment& a, const Event& x, const Event& y);

}  // namespace qprob
