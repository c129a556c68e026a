#pragma once

#include <string>
#include <vector>

#include "qprob/assessment.hpp"

namespace qprob {

// The purely null events of an assessment together with a report on the
// (finite) ideal laws.  Containment of ∅ and downward closure hold by
// construction of "purely null"; union closure can fail when the assessment
// is not separable, in which case a diagnostic names a failing pair.
struct PurelyNullIdeal {
  std::vector<Event> events;  // canonical order
  bool contains_empty = false;
  bool downward_closed = false;
  bool union_closed = false;
  std::vector<std::string> diagnostics;
  bool ideal_laws_hold() const { return contains_empty && downward_closed && union_closed; }
};

PurelyNullIdeal purely_null_ideal(const Assessment& a, std::size_t cap = kDefaultEnumerationCap);

// Events modulo purely-null symmetric difference.  Requires a separable
// source assessment (ContractError otherwise); separability makes the purely
// null events exactly the subsets of one largest purely null event N, makes
// each class a constant-rank set, and leaves every source level represented,
// so the quotient ranking is the source ranking on class representatives.
class QuotientAlgebra {
public:
  static QuotientAlgebra build(const Assessment& a, std::size_t cap = kDefaultEnumerationCap);

  const Assessment& source() const noexcept { return source_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t level_count() const noexcept { return source_.level_count(); }

  // Classes ordered by representative bitmask; members in canonical order.
  const std::vector<std::vector<Event>>& classes() const noexcept { return classes_; }
  const Event& representative(std::size_t cls) const;
  std::size_t class_of(const Event& e) const;
  int class_rank(std::size_t cls) const;
  std::size_t purely_null_class() const;  // the class of ∅

  // Lattice structure on classes, computed via representatives; member
  // independence is a checked property, not an assumption.
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t complement_class(std::size_t x) const;
  bool at_least(std::size_t x, std::size_t y) const;

  // The largest purely null event (union of all of them).
  Event null_part() const;

  // The quotient re-expressed as a power-set assessment over the atoms
  // outside null_part(), with their original labels; useful for feeding the
  // quotient back into every finite-algebra operation.  When no atom
  // survives (the all-tied assessment), returns the all-tied assessment on a
  // fresh single-atom algebra — the fixed point of quotienting.
  Assessment as_assessment() const;

private:
  QuotientAlgebra(Assessment source, std::uint32_t null_bits);

  Assessment source_;
  std::uint32_t null_bits_;
  std::vector<std::vector<Event>> classes_;
  std::vector<int> rank_;                   // per class (source levels)
  std::vector<std::size_t> class_by_key_;   // (bits & ~null_bits) → class id
};

QuotientAlgebra null_quotient(const Assessment& a, std::size_t cap = kDefaultEnumerationCap);

}  // namespace qprob
