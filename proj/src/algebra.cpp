#include "qprob/algebra.hpp"

#include <bit>

#include "qprob/error.hpp"

namespace qprob {

Algebra::Algebra(std::vector<std::string> atom_labels) {
  if (atom_labels.empty()) throw StructuralError("algebra needs at least one atom");
  if (atom_labels.size() > 32) {
    throw StructuralError("algebra supports at most 32 atoms, got " +
                          std::to_string(atom_labels.size()));
  }
  auto index = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < atom_labels.size(); ++i) {
    if (atom_labels[i].empty()) throw StructuralError("empty atom label");
    if (!index->emplace(atom_labels[i], i).second) {
      throw StructuralError("duplicate atom label \"" + atom_labels[i] + "\"");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(atom_labels));
  index_ = std::move(index);
}

const std::string& Algebra::atom_label(std::size_t atom) const {
  if (atom >= labels_->size()) {
    throw StructuralError("atom index " + std::to_string(atom) + " out of range");
  }
  return (*labels_)[atom];
}

std::size_t Algebra::atom_index(const std::string& label) const {
  auto it = index_->find(label);
  if (it == index_->end()) throw StructuralError("unknown atom label \"" + label + "\"");
  return it->second;
}

bool Algebra::has_atom(const std::string& label) const {
  return index_->find(label) != index_->end();
}

std::uint32_t Algebra::full_bits() const noexcept {
  const std::size_t n = atom_count();
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

Event Algebra::event(std::uint32_t bits) const {
  if ((bits & ~full_bits()) != 0) {
    throw StructuralError("event bitmask references atoms outside the algebra");
  }
  return Event(*this, bits);
}

Event Algebra::event_of(const std::vector<std::size_t>& atoms) const {
  std::uint32_t bits = 0;
  for (std::size_t atom : atoms) {
    if (atom >= atom_count()) {
      throw StructuralError("atom index " + std::to_string(atom) + " out of range");
    }
    bits |= std::uint32_t{1} << atom;
  }
  return Event(*this, bits);
}

Event Algebra::event_of_labels(const std::vector<std::string>& labels) const {
  std::uint32_t bits = 0;
  for (const std::string& label : labels) bits |= std::uint32_t{1} << atom_index(label);
  return Event(*this, bits);
}

Event Algebra::singleton(std::size_t atom) const {
  if (atom >= atom_count()) {
    throw StructuralError("atom index " + std::to_string(atom) + " out of range");
  }
  return Event(*this, std::uint32_t{1} << atom);
}

Event Algebra::empty_event() const { return Event(*this, 0); }

Event Algebra::full_event() const { return Event(*this, full_bits()); }

std::vector<Event> Algebra::all_events(std::size_t cap) const {
  if (atom_count() > cap) {
    throw CapacityError("event enumeration over " + std::to_string(atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Event> events;
  events.reserve(event_count());
  for (std::uint64_t bits = 0; bits < event_count(); ++bits) {
    events.push_back(Event(*this, static_cast<std::uint32_t>(bits)));
  }
  return events;
}

Algebra default_algebra(std::size_t atom_count) {
  std::vector<std::string> labels;
  labels.reserve(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) labels.push_back("a" + std::to_string(i + 1));
  return Algebra(std::move(labels));
}

std::size_t Event::cardinality() const noexcept { return std::popcount(bits_); }

bool Event::is_full() const noexcept { return bits_ == algebra_.full_bits(); }

bool Event::contains(std::size_t atom) const {
  if (atom >= algebra_.atom_count()) {
    throw StructuralError("atom index " + std::to_string(atom) + " out of range");
  }
  return (bits_ >> atom) & 1u;
}

std::vector<std::size_t> Event::atom_indices() const {
  std::vector<std::size_t> atoms;
  atoms.reserve(cardinality());
  for (std::size_t i = 0; i < algebra_.atom_count(); ++i) {
    if ((bits_ >> i) & 1u) atoms.push_back(i);
  }
  return atoms;
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  out.reserve(cardinality());
  for (std::size_t atom : atom_indices()) out.push_back(algebra_.atom_label(atom));
  return out;
}

std::string Event::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const std::string& label : labels()) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  out += "}";
  return out;
}

Event Event::complement() const { return Event(algebra_, bits_ ^ algebra_.full_bits()); }

bool Event::subset_of(const Event& other) const {
  require_same_algebra(*this, other, "subset test");
  return (bits_ & ~other.bits_) == 0;
}

bool Event::disjoint_with(const Event& other) const {
  require_same_algebra(*this, other, "disjointness test");
  return (bits_ & other.bits_) == 0;
}

void require_same_algebra(const Event& a, const Event& b, const char* context) {
  if (a.algebra() != b.algebra()) {
    throw StructuralError(std::string("events from different algebras in ") + context);
  }
}

Event event_union(const Event& a, const Event& b) {
  require_same_algebra(a, b, "union");
  return a.algebra().event(a.bits() | b.bits());
}

Event event_intersection(const Event& a, const Event& b) {
  require_same_algebra(a, b, "intersection");
  return a.algebra().event(a.bits() & b.bits());
}

Event event_difference(const Event& a, const Event& b) {
  require_same_algebra(a, b, "difference");
  return a.algebra().event(a.bits() & ~b.bits());
}

Event apply_event_op(EventOp op, const Event& a, const Event& b) {
  switch (op) {
    case EventOp::union_of: return event_union(a, b);
    case EventOp::intersection: return event_intersection(a, b);
    case EventOp::difference: return event_difference(a, b);
    case EventOp::complement_of_first:
      require_same_algebra(a, b, "complement-of-first");
      return a.complement();
  }
  throw StructuralError("unknown event operation");
}

bool operator==(const Event& a, const Event& b) {
  return a.algebra() == b.algebra() && a.bits() == b.bits();
}

bool event_canonical_less(const Event& a, const Event& b) {
  require_same_algebra(a, b, "canonical comparison");
  return a.bits() < b.bits();
}

bool is_antichain(const std::vector<Event>& events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (!events[i].disjoint_with(events[j])) return false;
    }
  }
  return true;
}

}  // namespace qprob
