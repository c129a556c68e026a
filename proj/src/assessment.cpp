#include "qprob/assessment.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qprob/error.hpp"

namespace qprob {

Assessment Assessment::from_levels(const Algebra& algebra,
                                   const std::vector<std::vector<Event>>& levels_low_to_high) {
  if (levels_low_to_high.empty()) throw StructuralError("assessment needs at least one level");
  std::vector<int> rank(algebra.event_count(), -1);
  for (std::size_t level = 0; level < levels_low_to_high.size(); ++level) {
    if (levels_low_to_high[level].empty()) {
      throw StructuralError("assessment level " + std::to_string(level) + " is empty");
    }
    for (const Event& event : levels_low_to_high[level]) {
      if (event.algebra() != algebra) {
        throw StructuralError("assessment level contains an event from a different algebra");
      }
      if (rank[event.bits()] != -1) {
        throw StructuralError("event " + event.to_string() + " appears in two levels");
      }
      rank[event.bits()] = static_cast<int>(level);
    }
  }
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    if (rank[bits] == -1) {
      throw StructuralError("event " + algebra.event(static_cast<std::uint32_t>(bits)).to_string() +
                            " is missing from the levels");
    }
  }
  return Assessment(algebra, std::move(rank), levels_low_to_high.size());
}

Assessment Assessment::from_ranks(const Algebra& algebra, const std::vector<int>& rank_by_bits) {
  if (rank_by_bits.size() != algebra.event_count()) {
    throw StructuralError("rank table needs one entry per event: got " +
                          std::to_string(rank_by_bits.size()) + " for " +
                          std::to_string(algebra.event_count()) + " events");
  }
  std::vector<int> sorted(rank_by_bits);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rank(rank_by_bits.size());
  for (std::size_t i = 0; i < rank_by_bits.size(); ++i) {
    rank[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), rank_by_bits[i]) - sorted.begin());
  }
  return Assessment(algebra, std::move(rank), sorted.size());
}

int Assessment::rank(const Event& event) const {
  if (event.algebra() != algebra_) {
    throw StructuralError("event belongs to a different algebra than the assessment");
  }
  return rank_[event.bits()];
}

int Assessment::rank_of_bits(std::uint32_t bits) const {
  if (bits >= rank_.size()) throw StructuralError("event bitmask out of range");
  return rank_[bits];
}

bool Assessment::at_least(const Event& a, const Event& b) const { return rank(a) >= rank(b); }

bool Assessment::strictly_above(const Event& a, const Event& b) const { return rank(a) > rank(b); }

bool Assessment::equivalent(const Event& a, const Event& b) const { return rank(a) == rank(b); }

std::vector<std::vector<Event>> Assessment::levels() const {
  std::vector<std::vector<Event>> out(level_count_);
  for (std::uint64_t bits = 0; bits < rank_.size(); ++bits) {
    out[rank_[bits]].push_back(algebra_.event(static_cast<std::uint32_t>(bits)));
  }
  return out;
}

Assessment induced_assessment(const SignedMeasure& mu, std::size_t cap) {
  const Algebra& algebra = mu.algebra();
  if (algebra.atom_count() > cap) {
    throw CapacityError("induced assessment over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  // Event sums by dynamic programming over bitmasks: strip the lowest atom.
  std::vector<Rat> value(algebra.event_count());
  for (std::uint64_t bits = 1; bits < algebra.event_count(); ++bits) {
    const unsigned low = std::countr_zero(bits);
    value[bits] = value[bits & (bits - 1)] + mu.weight(low);
  }
  std::map<Rat, int> level_of_value;
  for (const Rat& v : value) level_of_value.emplace(v, 0);
  int next = 0;
  for (auto& entry : level_of_value) entry.second = next++;
  std::vector<int> rank(algebra.event_count());
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    rank[bits] = level_of_value.at(value[bits]);
  }
  return Assessment::from_ranks(algebra, rank);
}

namespace {

// Comparison profile of an ordered pair: how a relates to b in the preorder.
enum class PairProfile { below, tied, above };

PairProfile profile(const Assessment& a, std::uint32_t x, std::uint32_t y) {
  const int rx = a.rank_of_bits(x);
  const int ry = a.rank_of_bits(y);
  if (rx < ry) return PairProfile::below;
  if (rx > ry) return PairProfile::above;
  return PairProfile::tied;
}

// Walks ordered pairs (x,y), x > y as bitmasks, and all events c disjoint
// from both; calls visit(x,y,c) whenever joining c changes the comparison
// profile, i.e. the separability biconditional fails in some direction.
// visit returning false stops the walk.
template <typename Visit>
void scan_separability(const Assessment& a, Visit&& visit) {
  const std::uint64_t count = a.algebra().event_count();
  const std::uint32_t full = a.algebra().full_bits();
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < x; ++y) {
      const PairProfile base = profile(a, x, y);
      const std::uint32_t free = full & ~(x | y);
      // Submasks of `free` in ascending numeric order.
      for (std::uint32_t c = 0;; c = ((c | ~free) + 1) & free) {
        if (c != 0 && profile(a, x | c, y | c) != base) {
          if (!visit(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), c)) return;
        }
        if (c == free) break;
      }
    }
  }
}

}  // namespace

ViolationList<SeparabilityViolation> check_separability(const Assessment& a, std::size_t limit) {
  ViolationList<SeparabilityViolation> out;
  const Algebra& algebra = a.algebra();
  scan_separability(a, [&](std::uint32_t x, std::uint32_t y, std::uint32_t c) {
    ++out.total;
    if (out.items.size() < limit) {
      out.items.push_back({algebra.event(x), algebra.event(y), algebra.event(c)});
    }
    return true;
  });
  return out;
}

bool separability_holds(const Assessment& a) {
  bool holds = true;
  scan_separability(a, [&](std::uint32_t, std::uint32_t, std::uint32_t) {
    holds = false;
    return false;
  });
  return holds;
}

ViolationList<MonotonicityViolation> check_monotonicity(const Assessment& a, std::size_t limit) {
  ViolationList<MonotonicityViolation> out;
  const Algebra& algebra = a.algebra();
  const std::uint64_t count = algebra.event_count();
  const std::uint32_t full = algebra.full_bits();
  for (std::uint64_t small = 0; small < count; ++small) {
    const int small_rank = a.rank_of_bits(static_cast<std::uint32_t>(small));
    const std::uint32_t free = full & ~static_cast<std::uint32_t>(small);
    for (std::uint32_t extra = 0;; extra = ((extra | ~free) + 1) & free) {
      const std::uint32_t large = static_cast<std::uint32_t>(small) | extra;
      if (small_rank > a.rank_of_bits(large)) {
        ++out.total;
        if (out.items.size() < limit) {
          out.items.push_back({algebra.event(static_cast<std::uint32_t>(small)),
                               algebra.event(large)});
        }
      }
      if (extra == free) break;
    }
  }
  return out;
}

bool check_nondegeneracy(const Assessment& a) { return a.level_count() >= 2; }

bool check_absoluteness(const Assessment& a) {
  return a.rank_of_bits(a.algebra().full_bits()) == a.rank_of_bits(0);
}

SignProfile sign_classify(const Assessment& a, const Event& e) {
  if (e.algebra() != a.algebra()) {
    throw StructuralError("event belongs to a different algebra than the assessment");
  }
  const int empty_rank = a.rank_of_bits(0);
  const int rank = a.rank_of_bits(e.bits());
  SignProfile out;
  out.base = rank > empty_rank   ? SignBase::positive
             : rank < empty_rank ? SignBase::negative
                                 : SignBase::null;
  out.purely_non_negative = true;
  out.purely_null = true;
  out.purely_non_positive = true;
  const std::uint32_t bits = e.bits();
  for (std::uint32_t sub = 0;; sub = ((sub | ~bits) + 1) & bits) {
    const int sub_rank = a.rank_of_bits(sub);
    if (sub_rank < empty_rank) out.purely_non_negative = false;
    if (sub_rank != empty_rank) out.purely_null = false;
    if (sub_rank > empty_rank) out.purely_non_positive = false;
    if (sub == bits) break;
  }
  out.thoroughly_positive = out.base == SignBase::positive && out.purely_non_negative;
  out.thoroughly_negative = out.base == SignBase::negative && out.purely_non_positive;
  return out;
}

HahnReport check_hahn(const Assessment& a, const Event& pos, const Event& neg) {
  if (pos.algebra() != a.algebra() || neg.algebra() != a.algebra()) {
    throw StructuralError("Hahn candidate events belong to a different algebra");
  }
  HahnReport report;
  const Algebra& algebra = a.algebra();
  const int pos_rank = a.rank(pos);
  const int neg_rank = a.rank(neg);

  report.extremal = true;
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    const int r = a.rank_of_bits(static_cast<std::uint32_t>(bits));
    if (r > pos_rank || r < neg_rank) {
      report.extremal = false;
      report.extremal_witness = algebra.event(static_cast<std::uint32_t>(bits));
      break;
    }
  }

  report.partitions = pos.disjoint_with(neg) && event_union(pos, neg).is_full();

  const SignProfile pos_profile = sign_classify(a, pos);
  report.pos_subevents_non_negative = pos_profile.purely_non_negative;
  if (!report.pos_subevents_non_negative) {
    const std::uint32_t bits = pos.bits();
    for (std::uint32_t sub = 0;; sub = ((sub | ~bits) + 1) & bits) {
      if (a.rank_of_bits(sub) < a.rank_of_bits(0)) {
        report.pos_witness = algebra.event(sub);
        break;
      }
      if (sub == bits) break;
    }
  }

  const SignProfile neg_profile = sign_classify(a, neg);
  report.neg_subevents_non_positive = neg_profile.purely_non_positive;
  if (!report.neg_subevents_non_positive) {
    const std::uint32_t bits = neg.bits();
    for (std::uint32_t sub = 0;; sub = ((sub | ~bits) + 1) & bits) {
      if (a.rank_of_bits(sub) > a.rank_of_bits(0)) {
        report.neg_witness = algebra.event(sub);
        break;
      }
      if (sub == bits) break;
    }
  }

  return report;
}

namespace {

std::vector<Event> events_at_level(const Assessment& a, int level) {
  std::vector<Event> out;
  const Algebra& algebra = a.algebra();
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    if (a.rank_of_bits(static_cast<std::uint32_t>(bits)) == level) {
      out.push_back(algebra.event(static_cast<std::uint32_t>(bits)));
    }
  }
  return out;
}

}  // namespace

std::vector<Event> top_ranked(const Assessment& a) {
  return events_at_level(a, static_cast<int>(a.level_count()) - 1);
}

std::vector<Event> bottom_ranked(const Assessment& a) { return events_at_level(a, 0); }

bool approx_equivalent(const Assessment& a, const Event& x, const Event& y) {
  require_same_algebra(x, y, "approximate equivalence");
  const Event symmetric_difference =
      event_union(event_difference(x, y), event_difference(y, x));
  return sign_classify(a, symmetric_difference).purely_null;
}

}  // namespace qprob
