#include "qprob/quotient.hpp"

#include <bit>

#include "qprob/error.hpp"

namespace qprob {

namespace {

// purely_null[e] ⇔ every subevent of e (including e) is null.  Computed by
// peeling one atom at a time: e is purely null iff e is null and so is every
// maximal proper subevent.
std::vector<bool> purely_null_table(const Assessment& a) {
  const std::uint64_t count = a.algebra().event_count();
  const int empty_rank = a.rank_of_bits(0);
  std::vector<bool> purely_null(count, false);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (a.rank_of_bits(static_cast<std::uint32_t>(bits)) != empty_rank) continue;
    bool ok = true;
    for (std::uint64_t rest = bits; rest != 0 && ok; rest &= rest - 1) {
      const std::uint64_t without_lowest = bits & ~(rest & -rest);
      ok = purely_null[without_lowest];
    }
    purely_null[bits] = ok;
  }
  return purely_null;
}

void require_cap(const Assessment& a, std::size_t cap, const char* what) {
  if (a.algebra().atom_count() > cap) {
    throw CapacityError(std::string(what) + " over " +
                        std::to_string(a.algebra().atom_count()) + " atoms exceeds the cap of " +
                        std::to_string(cap));
  }
}

}  // namespace

PurelyNullIdeal purely_null_ideal(const Assessment& a, std::size_t cap) {
  require_cap(a, cap, "purely-null scan");
  const Algebra& algebra = a.algebra();
  const std::vector<bool> purely_null = purely_null_table(a);

  PurelyNullIdeal out;
  std::uint32_t union_bits = 0;
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    if (purely_null[bits]) {
      out.events.push_back(algebra.event(static_cast<std::uint32_t>(bits)));
      union_bits |= static_cast<std::uint32_t>(bits);
    }
  }
  out.contains_empty = purely_null[0];
  out.downward_closed = true;  // immediate from the definition of "purely"
  // Pairwise union closure reduces to: the union of all purely null events
  // is itself purely null (downward closure covers everything below it).
  out.union_closed = purely_null[union_bits];
  if (!out.union_closed) {
    for (std::size_t i = 0; i < out.events.size() && out.diagnostics.empty(); ++i) {
      for (std::size_t j = i + 1; j < out.events.size(); ++j) {
        const std::uint32_t joined = out.events[i].bits() | out.events[j].bits();
        if (!purely_null[joined]) {
          out.diagnostics.push_back(
              "purely-null events are not closed under union: " + out.events[i].to_string() +
              " and " + out.events[j].to_string() + " are purely null but their union " +
              algebra.event(joined).to_string() + " is not");
          break;
        }
      }
    }
  }
  return out;
}

QuotientAlgebra::QuotientAlgebra(Assessment source, std::uint32_t null_bits)
    : source_(std::move(source)), null_bits_(null_bits) {
  const Algebra& algebra = source_.algebra();
  const std::uint64_t count = algebra.event_count();
  class_by_key_.assign(count, count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const std::uint32_t key = static_cast<std::uint32_t>(bits) & ~null_bits_;
    if (class_by_key_[key] == count) {
      class_by_key_[key] = classes_.size();
      classes_.emplace_back();
      rank_.push_back(source_.rank_of_bits(key));
    }
    classes_[class_by_key_[key]].push_back(algebra.event(static_cast<std::uint32_t>(bits)));
  }
  // Keys were visited in ascending order, and the key is the least member of
  // its class, so classes are already ordered by representative.
  for (std::size_t cls = 0; cls < classes_.size(); ++cls) {
    for (const Event& member : classes_[cls]) {
      if (source_.rank(member) != rank_[cls]) {
        throw Error("null quotient: class members disagree on rank despite separability");
      }
    }
  }
}

QuotientAlgebra QuotientAlgebra::build(const Assessment& a, std::size_t cap) {
  require_cap(a, cap, "null quotient");
  if (!separability_holds(a)) {
    throw ContractError("null quotient requires a separable assessment; "
                        "check_separability reports violations");
  }
  const std::vector<bool> purely_null = purely_null_table(a);
  std::uint32_t null_bits = 0;
  for (std::uint64_t bits = 0; bits < a.algebra().event_count(); ++bits) {
    if (purely_null[bits]) null_bits |= static_cast<std::uint32_t>(bits);
  }
  // Under separability the purely null events are exactly the subsets of
  // null_bits; the class of an event is therefore determined by its part
  // outside null_bits.
  for (std::uint64_t bits = 0; bits < a.algebra().event_count(); ++bits) {
    const bool expected = (bits & ~static_cast<std::uint64_t>(null_bits)) == 0;
    if (purely_null[bits] != expected) {
      throw Error("null quotient: purely null events do not form a power set");
    }
  }
  return QuotientAlgebra(a, null_bits);
}

const Event& QuotientAlgebra::representative(std::size_t cls) const {
  if (cls >= classes_.size()) throw StructuralError("quotient class index out of range");
  return classes_[cls].front();
}

std::size_t QuotientAlgebra::class_of(const Event& e) const {
  if (e.algebra() != source_.algebra()) {
    throw StructuralError("event belongs to a different algebra than the quotient's source");
  }
  return class_by_key_[e.bits() & ~null_bits_];
}

int QuotientAlgebra::class_rank(std::size_t cls) const {
  if (cls >= rank_.size()) throw StructuralError("quotient class index out of range");
  return rank_[cls];
}

std::size_t QuotientAlgebra::purely_null_class() const { return class_by_key_[0]; }

std::size_t QuotientAlgebra::join(std::size_t x, std::size_t y) const {
  return class_of(event_union(representative(x), representative(y)));
}

std::size_t QuotientAlgebra::meet(std::size_t x, std::size_t y) const {
  return class_of(event_intersection(representative(x), representative(y)));
}

std::size_t QuotientAlgebra::complement_class(std::size_t x) const {
  return class_of(representative(x).complement());
}

bool QuotientAlgebra::at_least(std::size_t x, std::size_t y) const {
  return class_rank(x) >= class_rank(y);
}

Event QuotientAlgebra::null_part() const { return source_.algebra().event(null_bits_); }

Assessment QuotientAlgebra::as_assessment() const {
  const Algebra& algebra = source_.algebra();
  std::vector<std::size_t> surviving;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
    if (((null_bits_ >> i) & 1u) == 0) {
      surviving.push_back(i);
      labels.push_back(algebra.atom_label(i));
    }
  }
  if (surviving.empty()) {
    // Everything is purely null: the quotient is the one-class algebra.  Its
    // power-set form is the all-tied ranking on a fresh single-atom algebra.
    const Algebra sentinel = default_algebra(1);
    return Assessment::from_ranks(sentinel, {0, 0});
  }
  const Algebra reduced(std::move(labels));
  std::vector<int> ranks(reduced.event_count());
  for (std::uint64_t bits = 0; bits < reduced.event_count(); ++bits) {
    std::uint32_t expanded = 0;
    for (std::size_t j = 0; j < surviving.size(); ++j) {
      if ((bits >> j) & 1u) expanded |= std::uint32_t{1} << surviving[j];
    }
    ranks[bits] = source_.rank_of_bits(expanded);
  }
  return Assessment::from_ranks(reduced, ranks);
}

QuotientAlgebra null_quotient(const Assessment& a, std::size_t cap) {
  return QuotientAlgebra::build(a, cap);
}

}  // namespace qprob
