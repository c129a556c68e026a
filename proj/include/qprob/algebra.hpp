#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace qprob {

class Event;

// Everything that walks all 2^n events refuses to run past this many atoms
// unless the caller raises the cap explicitly.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Finite power-set algebra over a list of named atoms.  An Algebra is a cheap
// shared handle: copying it copies a pointer, and two copies of the same
// construction compare equal and fast.  Distinct constructions with the same
// labels also compare equal (by label list).
class Algebra {
public:
  // Labels must be nonempty, pairwise distinct, at most 32 of them.
  explicit Algebra(std::vector<std::string> atom_labels);

  std::size_t atom_count() const noexcept { return labels_->size(); }
  const std::vector<std::string>& atom_labels() const noexcept { return *labels_; }
  const std::string& atom_label(std::size_t atom) const;
  std::size_t atom_index(const std::string& label) const;  // StructuralError if unknown
  bool has_atom(const std::string& label) const;

  std::uint32_t full_bits() const noexcept;
  std::size_t event_count() const noexcept { return std::size_t{1} << atom_count(); }

  Event event(std::uint32_t bits) const;  // StructuralError if bits name absent atoms
  Event event_of(const std::vector<std::size_t>& atoms) const;
  Event event_of_labels(const std::vector<std::string>& labels) const;
  Event singleton(std::size_t atom) const;
  Event empty_event() const;
  Event full_event() const;

  // All events in canonical order (bitmask ascending, so the empty event is
  // first and the full event last).  CapacityError past the cap.
  std::vector<Event> all_events(std::size_t cap = kDefaultEnumerationCap) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, std::size_t>> index_;
};

// Convenience for tests and generated inputs: atoms "a1".."an".
Algebra default_algebra(std::size_t atom_count);

// A subset of an algebra's atoms, stored as a bitmask (bit i = atom i).
// Events remember their algebra; set operations on events from different
// algebras throw StructuralError.
class Event {
public:
  const Algebra& algebra() const noexcept { return algebra_; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t cardinality() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept;
  bool contains(std::size_t atom) const;
  std::vector<std::size_t> atom_indices() const;
  std::vector<std::string> labels() const;  // in atom order
  std::string to_string() const;            // "{a,b}", "{}" — for diagnostics

  Event complement() const;
  bool subset_of(const Event& other) const;
  bool disjoint_with(const Event& other) const;

private:
  friend class Algebra;
  Event(Algebra algebra, std::uint32_t bits) : algebra_(std::move(algebra)), bits_(bits) {}

  Algebra algebra_;
  std::uint32_t bits_;
};

void require_same_algebra(const Event& a, const Event& b, const char* context);

Event event_union(const Event& a, const Event& b);
Event event_intersection(const Event& a, const Event& b);
Event event_difference(const Event& a, const Event& b);

enum class EventOp { union_of, intersection, difference, complement_of_first };
Event apply_event_op(EventOp op, const Event& a, const Event& b);

// Non-throwing: events of different algebras are simply unequal.
bool operator==(const Event& a, const Event& b);
inline bool operator!=(const Event& a, const Event& b) { return !(a == b); }

// Canonical order: ascending bitmask, i.e. the order of Algebra::all_events.
// Used wherever a deterministic representative or tie-break is needed.
bool event_canonical_less(const Event& a, const Event& b);

// True when the events are pairwise disjoint (vacuously true for the empty
// list).  Throws StructuralError on mixed algebras.
bool is_antichain(const std::vector<Event>& events);

}  // namespace qprob
