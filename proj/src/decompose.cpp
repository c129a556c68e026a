#include "qprob/decompose.hpp"

#include <algorithm>
#include <bit>

#include "qprob/error.hpp"

namespace qprob {

namespace {

// Full table of μ(A) for every event bitmask, by stripping the lowest atom.
std::vector<Rat> value_table(const SignedMeasure& mu) {
  std::vector<Rat> value(mu.algebra().event_count());
  for (std::uint64_t bits = 1; bits < value.size(); ++bits) {
    const unsigned low = std::countr_zero(bits);
    value[bits] = value[bits & (bits - 1)] + mu.weight(low);
  }
  return value;
}

}  // namespace

HahnPair hahn(const SignedMeasure& mu, ZeroPolicy policy) {
  if (policy == ZeroPolicy::enumerate_all) {
    throw StructuralError("hahn with enumerate_all yields a family; call hahn_all");
  }
  const Algebra& algebra = mu.algebra();
  std::uint32_t pos_bits = 0;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
    const int s = sign_of(mu.weight(i));
    if (s > 0 || (s == 0 && policy == ZeroPolicy::to_pos)) pos_bits |= std::uint32_t{1} << i;
  }
  const Event pos = algebra.event(pos_bits);
  return {pos, pos.complement()};
}

std::vector<HahnPair> hahn_all(const SignedMeasure& mu, std::size_t max_zero_atoms) {
  const Algebra& algebra = mu.algebra();
  std::uint32_t positive_bits = 0;
  std::vector<std::size_t> zero_atoms;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
    const int s = sign_of(mu.weight(i));
    if (s > 0) positive_bits |= std::uint32_t{1} << i;
    if (s == 0) zero_atoms.push_back(i);
  }
  if (zero_atoms.size() > max_zero_atoms) {
    throw CapacityError("hahn_all over " + std::to_string(zero_atoms.size()) +
                        " zero-weight atoms exceeds the cap of " +
                        std::to_string(max_zero_atoms));
  }
  std::vector<HahnPair> pairs;
  pairs.reserve(std::size_t{1} << zero_atoms.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << zero_atoms.size()); ++pick) {
    std::uint32_t pos_bits = positive_bits;
    for (std::size_t j = 0; j < zero_atoms.size(); ++j) {
      if ((pick >> j) & 1u) pos_bits |= std::uint32_t{1} << zero_atoms[j];
    }
    const Event pos = algebra.event(pos_bits);
    pairs.push_back({pos, pos.complement()});
  }
  return pairs;
}

JordanPair jordan(const SignedMeasure& mu) {
  if (mu.total() != 0) {
    throw ContractError("Jordan decomposition requires total measure zero (absoluteness): "
                        "total is " + format_rational(mu.total()));
  }
  if (std::max(mu.positive_mass(), mu.negative_mass()) != 1) {
    throw ContractError("Jordan decomposition requires a normalized measure "
                        "(max |mu(A)| over events must be 1)");
  }
  std::vector<Rat> w0, w1;
  w0.reserve(mu.algebra().atom_count());
  w1.reserve(mu.algebra().atom_count());
  for (const Rat& w : mu.weights()) {
    w0.push_back(w < 0 ? -w : Rat(0));
    w1.push_back(w > 0 ? w : Rat(0));
  }
  return {SignedMeasure(mu.algebra(), std::move(w0)), SignedMeasure(mu.algebra(), std::move(w1))};
}

bool verify_jordan_sup_formula(const SignedMeasure& mu, const JordanPair& jp, std::size_t cap) {
  const Algebra& algebra = mu.algebra();
  if (jp.mu0.algebra() != algebra || jp.mu1.algebra() != algebra) {
    throw StructuralError("Jordan pair lives on a different algebra than the measure");
  }
  if (algebra.atom_count() > cap) {
    throw CapacityError("sup-formula check over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  const std::vector<Rat> value = value_table(mu);
  const std::vector<Rat> value0 = value_table(jp.mu0);
  const std::vector<Rat> value1 = value_table(jp.mu1);
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    Rat best_above = 0;  // both bounds are attained at worst by B = ∅
    Rat best_below = 0;
    const std::uint32_t mask = static_cast<std::uint32_t>(bits);
    for (std::uint32_t sub = 0;; sub = ((sub | ~mask) + 1) & mask) {
      if (value[sub] > best_above) best_above = value[sub];
      if (value[sub] < best_below) best_below = value[sub];
      if (sub == mask) break;
    }
    if (value1[bits] != best_above || value0[bits] != -best_below) return false;
  }
  return true;
}

BayesianRep bayes_family(const SignedMeasure& mu, const Rat& p,
                         const std::optional<Event>& guess) {
  const JordanPair jp = jordan(mu);
  if (!(p > 0 && p < 1)) {
    throw ContractError("mixture parameter p = " + format_rational(p) +
                        " is outside (0,1); the guess's prior mass mu0(guess) "
                        "must lie strictly between 0 and 1");
  }
  const SignedMeasure mu0 = ((1 - p) * jp.mu0) + (p * jp.mu1);
  const SignedMeasure& mu1 = jp.mu1;
  const HahnPair h = hahn(mu, ZeroPolicy::to_pos);
  Event g = guess.value_or(h.pos);
  if (guess.has_value()) {
    const Assessment ranking = induced_assessment(mu);
    if (!(ranking.equivalent(g, h.pos) && mu0.value(g) == mu0.value(h.pos) &&
          mu1.value(g) == mu1.value(h.pos))) {
      throw ContractError("guess " + g.to_string() +
                          " fails the equivalence clauses against the Hahn positive part " +
                          h.pos.to_string());
    }
  }
  if (mu0.value(g) != p) throw Error("bayes_family: guess prior mass drifted from p");
  return {mu0, mu1, std::move(g), p};
}

BayesianReport verify_bayesian(const Assessment& a, const SignedMeasure& mu0,
                               const SignedMeasure& mu1, const Event& guess, std::size_t cap) {
  const Algebra& algebra = a.algebra();
  if (mu0.algebra() != algebra || mu1.algebra() != algebra || guess.algebra() != algebra) {
    throw StructuralError("Bayesian candidate parts live on different algebras");
  }
  if (algebra.atom_count() > cap) {
    throw CapacityError("Bayesian verification over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  BayesianReport report;

  const Assessment induced = induced_assessment(mu1 - mu0, cap);
  report.ranking_matches = (induced == a);
  if (!report.ranking_matches) {
    for (std::uint64_t x = 0; x < algebra.event_count() && !report.ranking_witness; ++x) {
      for (std::uint64_t y = 0; y < x; ++y) {
        const auto order_in = [](const Assessment& s, std::uint64_t u, std::uint64_t v) {
          const int ru = s.rank_of_bits(static_cast<std::uint32_t>(u));
          const int rv = s.rank_of_bits(static_cast<std::uint32_t>(v));
          return (ru > rv) - (ru < rv);
        };
        if (order_in(a, x, y) != order_in(induced, x, y)) {
          report.ranking_witness = {algebra.event(static_cast<std::uint32_t>(x)),
                                    algebra.event(static_cast<std::uint32_t>(y))};
          break;
        }
      }
    }
  }

  const Rat guess_mass = mu0.value(guess);
  report.guess_mass_interior = guess_mass > 0 && guess_mass < 1;

  if (guess_mass == 0) {
    report.conditional_formula = false;  // conditioning on a null guess is undefined
  } else {
    report.conditional_formula = true;
    const std::vector<Rat> value0 = value_table(mu0);
    const std::vector<Rat> value1 = value_table(mu1);
    for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
      if (value1[bits] * guess_mass != value0[bits & guess.bits()]) {
        report.conditional_formula = false;
        report.conditional_witness = algebra.event(static_cast<std::uint32_t>(bits));
        break;
      }
    }
  }
  return report;
}

std::vector<Rat> default_p_grid() {
  std::vector<Rat> grid;
  for (int k = 1; k <= 9; ++k) {
    Rat p(k, 10);
    p.canonicalize();  // mpq_class(n, d) does not reduce the fraction itself
    grid.push_back(p);
  }
  grid.push_back(Rat(23, 100));
  grid.push_back(Rat(73, 150));
  return grid;
}

namespace {

// Predicate used by the exhaustive scan: the tuple is a mixture
// prior at q = mu0(H⊕) with the Jordan positive part as posterior, and the
// guess matches the Hahn positive part in ranking, prior mass, and posterior
// mass.
bool predicted_bayesian(const Assessment& a, const JordanPair& jp, const HahnPair& h,
                        const SignedMeasure& mu0, const SignedMeasure& mu1, const Event& g) {
  const Rat q = mu0.value(h.pos);
  if (!(q > 0 && q < 1)) return false;
  if (mu0 != ((1 - q) * jp.mu0) + (q * jp.mu1)) return false;
  if (mu1 != jp.mu1) return false;
  return a.equivalent(g, h.pos) && mu0.value(g) == q && mu1.value(g) == mu1.value(h.pos);
}

SignedMeasure conditional_on(const SignedMeasure& mu0, const Event& g, const Rat& guess_mass) {
  std::vector<Rat> weights(mu0.algebra().atom_count(), Rat(0));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if ((g.bits() >> i) & 1u) weights[i] = mu0.weight(i) / guess_mass;
  }
  return SignedMeasure(mu0.algebra(), std::move(weights));
}

}  // namespace

BayesFamilyScan bayes_family_complete(const Assessment& a, const SignedMeasure& mu,
                                      std::size_t max_atoms) {
  const Algebra& algebra = mu.algebra();
  if (a.algebra() != algebra) {
    throw StructuralError("assessment and measure live on different algebras");
  }
  if (algebra.atom_count() > max_atoms) {
    throw CapacityError("exhaustive Bayesian scan over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(max_atoms));
  }
  if (mu.is_zero()) {
    throw ContractError("degenerate (zero) measure admits no Bayesian representation: "
                        "non-degeneracy fails");
  }
  const JordanPair jp = jordan(mu);
  const HahnPair h = hahn(mu, ZeroPolicy::to_pos);

  BayesFamilyScan scan;
  std::vector<std::uint32_t> admissible_bits;
  std::vector<SignedMeasure> posteriors_seen;

  const auto consider = [&](const SignedMeasure& mu0, const SignedMeasure& mu1, const Event& g) {
    ++scan.tuples_checked;
    const bool verifies = verify_bayesian(a, mu0, mu1, g).ok();
    const bool predicted = predicted_bayesian(a, jp, h, mu0, mu1, g);
    if (verifies != predicted) scan.matches_mixture_form = false;
    if (verifies && !predicted) scan.rejects_perturbed = false;
    if (verifies) {
      if (std::find(admissible_bits.begin(), admissible_bits.end(), g.bits()) ==
          admissible_bits.end()) {
        admissible_bits.push_back(g.bits());
      }
      if (std::find(posteriors_seen.begin(), posteriors_seen.end(), mu1) ==
          posteriors_seen.end()) {
        posteriors_seen.push_back(mu1);
      }
    }
  };

  // The parameterized family itself, across every guess and the p grid.
  for (const Rat& p : default_p_grid()) {
    const SignedMeasure mu0 = ((1 - p) * jp.mu0) + (p * jp.mu1);
    for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
      consider(mu0, jp.mu1, algebra.event(static_cast<std::uint32_t>(bits)));
    }
  }

  // Out-of-form probes.  Swapped posterior and boundary mixtures:
  {
    const Rat half(1, 2);
    const SignedMeasure mid = (half * jp.mu0) + (half * jp.mu1);
    consider(mid, jp.mu0, h.pos);       // posterior replaced by the negative part
    consider(jp.mu0, jp.mu1, h.pos);    // boundary p = 0 (prior = negative part)
    consider(jp.mu1, jp.mu1, h.pos);    // boundary p = 1 (prior = posterior)

    // Conditional pairs: the prior conditioned on every non-null, non-sure
    // guess.  Only guesses equivalent to the Hahn positive part may verify.
    for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
      const Event g = algebra.event(static_cast<std::uint32_t>(bits));
      const Rat mass = mid.value(g);
      if (!(mass > 0 && mass < 1)) continue;
      consider(mid, conditional_on(mid, g, mass), g);
    }

    // Priors nudged off the mixture line by shifting mass between two atoms.
    for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
      for (std::size_t j = 0; j < algebra.atom_count(); ++j) {
        if (i == j) continue;
        std::vector<Rat> weights(mid.weights());
        weights[i] += Rat(1, 7);
        weights[j] -= Rat(1, 7);
        if (weights[j] < 0) continue;
        const SignedMeasure shifted(algebra, std::move(weights));
        const Rat mass = shifted.value(h.pos);
        if (!(mass > 0 && mass < 1)) continue;
        consider(shifted, conditional_on(shifted, h.pos, mass), h.pos);
      }
    }
  }

  std::sort(admissible_bits.begin(), admissible_bits.end());
  for (std::uint32_t bits : admissible_bits) scan.admissible_guesses.push_back(algebra.event(bits));
  scan.posterior_unique = posteriors_seen.size() <= 1;
  return scan;
}

std::vector<Rat> radon_nikodym_density(const SignedMeasure& mu0, const SignedMeasure& mu1) {
  if (mu0.algebra() != mu1.algebra()) {
    throw StructuralError("density requires both measures on one algebra");
  }
  std::vector<Rat> density;
  density.reserve(mu0.algebra().atom_count());
  for (std::size_t i = 0; i < mu0.algebra().atom_count(); ++i) {
    if (mu0.weight(i) == 0) {
      if (mu1.weight(i) != 0) {
        throw ContractError("absolute continuity fails at atom \"" +
                            mu0.algebra().atom_label(i) + "\": mu0 vanishes but mu1 does not");
      }
      density.push_back(Rat(0));
    } else {
      density.push_back(mu1.weight(i) / mu0.weight(i));
    }
  }
  return density;
}

std::optional<Event> annulment_search(const SignedMeasure& mu, const Event& a_plus,
                                      const Event& a_minus, std::size_t cap) {
  const Algebra& algebra = mu.algebra();
  if (a_plus.algebra() != algebra || a_minus.algebra() != algebra) {
    throw StructuralError("annulment events live on a different algebra than the measure");
  }
  if (algebra.atom_count() > cap) {
    throw CapacityError("annulment search over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  if (!a_plus.disjoint_with(a_minus)) {
    throw ContractError("annulment search requires disjoint parts: " + a_plus.to_string() +
                        " meets " + a_minus.to_string());
  }
  const Assessment ranking = induced_assessment(mu, cap);
  if (!sign_classify(ranking, a_plus).purely_non_negative) {
    throw ContractError("annulment search requires a purely non-negative positive part: " +
                        a_plus.to_string() + " has a negative subevent");
  }
  if (!sign_classify(ranking, a_minus).purely_non_positive) {
    throw ContractError("annulment search requires a purely non-positive negative part: " +
                        a_minus.to_string() + " has a positive subevent");
  }
  if (mu.value(event_union(a_plus, a_minus)) < 0) {
    throw ContractError("annulment search requires mu(a_plus ∪ a_minus) ≥ 0");
  }
  const Rat target = -mu.value(a_minus);
  const std::vector<Rat> value = value_table(mu);
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    if ((bits & ~static_cast<std::uint64_t>(a_plus.bits())) != 0) continue;
    if (value[bits] == target) return algebra.event(static_cast<std::uint32_t>(bits));
  }
  return std::nullopt;
}

}  // namespace qprob
