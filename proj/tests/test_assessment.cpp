#include <doctest.h>

#include "qprob/assessment.hpp"
#include "qprob/error.hpp"
#include "support.hpp"

using namespace qprob;
using qprob::testing::rat;

namespace {

Assessment induced(const Algebra& alg, std::vector<Rat> w) {
  return induced_assessment(SignedMeasure(alg, std::move(w)));
}

}  // namespace

TEST_CASE("from_levels requires a partition into nonempty levels") {
  Algebra alg({"a", "b"});
  auto e = [&](std::uint32_t bits) { return alg.event(bits); };
  Assessment a = Assessment::from_levels(alg, {{e(0)}, {e(1), e(2)}, {e(3)}});
  CHECK(a.level_count() == 3);
  CHECK(a.rank(e(0)) == 0);
  CHECK(a.rank(e(1)) == 1);
  CHECK(a.rank(e(2)) == 1);
  CHECK(a.rank(e(3)) == 2);

  CHECK_THROWS_AS(Assessment::from_levels(alg, {{e(0)}, {e(1), e(2)}}), StructuralError);
  CHECK_THROWS_AS(Assessment::from_levels(alg, {{e(0)}, {e(1), e(2), e(2)}, {e(3)}}),
                  StructuralError);
  CHECK_THROWS_AS(Assessment::from_levels(alg, {{e(0)}, {}, {e(1), e(2), e(3)}}),
                  StructuralError);
}

TEST_CASE("from_ranks compresses to contiguous levels") {
  Algebra alg({"a", "b"});
  Assessment a = Assessment::from_ranks(alg, {5, 9, 9, 20});
  CHECK(a.level_count() == 3);
  CHECK(a.rank_of_bits(0) == 0);
  CHECK(a.rank_of_bits(1) == 1);
  CHECK(a.rank_of_bits(2) == 1);
  CHECK(a.rank_of_bits(3) == 2);
  CHECK_THROWS_AS(Assessment::from_ranks(alg, {0, 1, 2}), StructuralError);
}

TEST_CASE("induced assessment ranks events by measure value") {
  Algebra alg({"a", "b"});
  Assessment a = induced(alg, {rat(1), rat(-1)});
  // values: {} = 0, {a} = 1, {b} = -1, {a,b} = 0
  CHECK(a.level_count() == 3);
  CHECK(a.rank_of_bits(0b10) == 0);
  CHECK(a.rank_of_bits(0b00) == 1);
  CHECK(a.rank_of_bits(0b11) == 1);
  CHECK(a.rank_of_bits(0b01) == 2);
  CHECK(a.at_least(alg.event(0b01), alg.event(0b00)));
  CHECK(a.strictly_above(alg.event(0b01), alg.event(0b10)));
  CHECK(a.equivalent(alg.event(0b00), alg.event(0b11)));
}

TEST_CASE("levels reconstruct the assessment") {
  Algebra alg({"a", "b", "c"});
  Assessment a = induced(alg, {rat(2), rat(-1), rat(0)});
  Assessment b = Assessment::from_levels(alg, a.levels());
  CHECK(a == b);
}

TEST_CASE("induced assessments are separable; a hand-built tie pattern is not") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    for (std::size_t n = 2; n <= 5; ++n) {
      Algebra alg = default_algebra(n);
      CHECK(separability_holds(induced_assessment(qprob::testing::random_measure(rng, alg))));
    }
  }

  // {} ~ {a} ~ {b} but {a,b} strictly above: adding the disjoint {b} to the
  // tied pair ({a}, {}) breaks the tie.
  Algebra alg({"a", "b"});
  Assessment bad = Assessment::from_ranks(alg, {0, 0, 0, 1});
  CHECK_FALSE(separability_holds(bad));
  auto v = check_separability(bad);
  CHECK_FALSE(v.clean());
  REQUIRE(!v.items.empty());
  for (const auto& item : v.items) {
    // each reported triple must be a genuine profile mismatch
    CHECK(item.c.disjoint_with(item.a));
    CHECK(item.c.disjoint_with(item.b));
    const bool before_ge = bad.at_least(item.a, item.b);
    const bool after_ge = bad.at_least(event_union(item.a, item.c), event_union(item.b, item.c));
    const bool before_le = bad.at_least(item.b, item.a);
    const bool after_le = bad.at_least(event_union(item.b, item.c), event_union(item.a, item.c));
    CHECK((before_ge != after_ge || before_le != after_le));
  }
}

TEST_CASE("violation lists truncate at the limit but keep exact totals") {
  Algebra alg = default_algebra(3);
  Assessment bad = Assessment::from_ranks(alg, {0, 0, 0, 0, 0, 0, 0, 1});
  auto all = check_separability(bad, 1000);
  auto capped = check_separability(bad, 2);
  CHECK(all.total > 2);
  CHECK(capped.items.size() == 2);
  CHECK(capped.total == all.total);
  CHECK(all.items.size() == all.total);
}

TEST_CASE("monotonicity flags subset rank reversals") {
  Algebra alg({"a", "b"});
  Assessment a = induced(alg, {rat(1), rat(-2)});
  auto v = check_monotonicity(a);
  CHECK_FALSE(v.clean());
  for (const auto& item : v.items) {
    CHECK(item.small.subset_of(item.large));
    CHECK(a.strictly_above(item.small, item.large));
  }

  Assessment good = induced(alg, {rat(1), rat(2)});
  CHECK(check_monotonicity(good).clean());
}

TEST_CASE("non-degeneracy and absoluteness") {
  Algebra alg({"a", "b"});
  CHECK_FALSE(check_nondegeneracy(induced(alg, {rat(0), rat(0)})));
  CHECK(check_nondegeneracy(induced(alg, {rat(1), rat(0)})));
  CHECK(check_absoluteness(induced(alg, {rat(1), rat(-1)})));
  CHECK_FALSE(check_absoluteness(induced(alg, {rat(1), rat(1)})));
}

TEST_CASE("sign classification distinguishes thorough from mere base sign") {
  Algebra alg({"a", "b", "c"});
  Assessment a = induced(alg, {rat(1), rat(-1), rat(0)});

  SignProfile pa = sign_classify(a, alg.event(0b001));
  CHECK(pa.base == SignBase::positive);
  CHECK(pa.thoroughly_positive);

  SignProfile pc = sign_classify(a, alg.event(0b100));
  CHECK(pc.base == SignBase::null);
  CHECK(pc.purely_null);

  SignProfile pac = sign_classify(a, alg.event(0b101));
  CHECK(pac.base == SignBase::positive);
  CHECK(pac.purely_non_negative);
  CHECK(pac.thoroughly_positive);

  // {a,b} is null overall yet hides a positive and a negative subevent
  SignProfile pab = sign_classify(a, alg.event(0b011));
  CHECK(pab.base == SignBase::null);
  CHECK_FALSE(pab.purely_null);
  CHECK_FALSE(pab.purely_non_negative);
  CHECK_FALSE(pab.purely_non_positive);

  SignProfile pb = sign_classify(a, alg.event(0b010));
  CHECK(pb.thoroughly_negative);
}

TEST_CASE("ordinal Hahn test accepts both zero placements and rejects others") {
  Algebra alg({"a", "b", "c"});
  Assessment a = induced(alg, {rat(1), rat(-1), rat(0)});

  CHECK(check_hahn(a, alg.event(0b101), alg.event(0b010)).ok());
  CHECK(check_hahn(a, alg.event(0b001), alg.event(0b110)).ok());

  HahnReport r = check_hahn(a, alg.event(0b011), alg.event(0b100));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.extremal);
  CHECK(r.extremal_witness.has_value());

  HahnReport overlap = check_hahn(a, alg.event(0b001), alg.event(0b011));
  CHECK_FALSE(overlap.partitions);
}

TEST_CASE("top and bottom ranked events") {
  Algebra alg({"a", "b", "c"});
  Assessment a = induced(alg, {rat(1), rat(-1), rat(0)});
  auto top = top_ranked(a);
  auto bottom = bottom_ranked(a);
  REQUIRE(top.size() == 2);
  CHECK(top[0].bits() == 0b001);
  CHECK(top[1].bits() == 0b101);
  REQUIRE(bottom.size() == 2);
  CHECK(bottom[0].bits() == 0b010);
  CHECK(bottom[1].bits() == 0b110);
}

TEST_CASE("approx_equivalent ignores purely null differences only") {
  Algebra alg({"a", "b", "c"});
  Assessment a = induced(alg, {rat(1), rat(-1), rat(0)});
  CHECK(approx_equivalent(a, alg.event(0b001), alg.event(0b101)));
  CHECK(approx_equivalent(a, alg.event(0b100), alg.empty_event()));
  CHECK_FALSE(approx_equivalent(a, alg.event(0b001), alg.event(0b010)));
  // {} and {a,b} are equivalent (both null) but their difference is not purely null
  CHECK(a.equivalent(alg.empty_event(), alg.event(0b011)));
  CHECK_FALSE(approx_equivalent(a, alg.empty_event(), alg.event(0b011)));
}
