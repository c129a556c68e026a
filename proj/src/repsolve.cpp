#include "qprob/repsolve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qprob/error.hpp"

namespace qprob {

RepresentationResult solve_representation(const Assessment& a, const SolveOptions& options) {
  const Algebra& algebra = a.algebra();
  const std::size_t n = algebra.atom_count();
  if (n > options.enumeration_cap) {
    throw CapacityError("representation solve over " + std::to_string(n) +
                        " atoms exceeds the cap of " + std::to_string(options.enumeration_cap));
  }
  const std::size_t levels = a.level_count();
  const std::size_t num_vars = n + levels;  // atom weights, then level values

  // Equality system: each event ties its atom-weight sum to its level value;
  // one extra row anchors the empty event's level at zero.
  RatMatrix equalities;
  equalities.reserve(algebra.event_count() + 1);
  for (std::uint64_t bits = 0; bits < algebra.event_count(); ++bits) {
    RatVec row(num_vars, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) row[i] = 1;
    }
    row[n + a.rank_of_bits(static_cast<std::uint32_t>(bits))] -= 1;
    equalities.push_back(std::move(row));
  }
  {
    RatVec anchor(num_vars, Rat(0));
    anchor[n + a.rank_of_bits(0)] = 1;
    equalities.push_back(std::move(anchor));
  }

  std::vector<std::size_t> column_order(num_vars);
  std::iota(column_order.begin(), column_order.end(), 0);
  if (options.reverse_pivot_order) std::reverse(column_order.begin(), column_order.end());

  const RatMatrix basis = null_space_basis(equalities, num_vars, column_order);

  RepresentationResult result;
  result.solution_dimension = basis.size();

  // Unit-gap inequalities between consecutive level values, rewritten in
  // null-space coordinates.
  RatMatrix gap_rows;
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    RatVec row(basis.size(), Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      row[j] = basis[j][n + k + 1] - basis[j][n + k];
    }
    gap_rows.push_back(std::move(row));
  }

  const StrictFeasibility feasibility = satisfy_unit_gaps(gap_rows, basis.size());
  if (!feasibility.feasible) {
    result.status = RepStatus::infeasible;
    return result;
  }

  RatVec solution(num_vars, Rat(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (feasibility.point[j] == 0) continue;
    for (std::size_t c = 0; c < num_vars; ++c) {
      solution[c] += feasibility.point[j] * basis[j][c];
    }
  }

  // Defensive exactness checks: the point must satisfy every original
  // constraint, not just the reduced system.
  for (const RatVec& row : equalities) {
    Rat dot = 0;
    for (std::size_t c = 0; c < num_vars; ++c) dot += row[c] * solution[c];
    if (dot != 0) throw Error("representation solve: equality residual is nonzero");
  }
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    if (solution[n + k + 1] - solution[n + k] < 1) {
      throw Error("representation solve: level gap below unit");
    }
  }

  std::vector<Rat> weights(solution.begin(), solution.begin() + n);
  SignedMeasure raw(algebra, std::move(weights));
  std::vector<Rat> class_values(solution.begin() + n, solution.end());

  if (raw.is_zero()) {
    // Only the all-tied ranking lands here (any two distinct level values
    // force a nonzero weight); its sole representation is the zero measure,
    // which has no normalized form.
    result.measure = std::move(raw);
  } else {
    const Rat scale = std::max(raw.positive_mass(), raw.negative_mass());
    result.measure = normalize(raw);
    for (Rat& v : class_values) v /= scale;
  }
  result.class_values = std::move(class_values);
  result.status = result.solution_dimension == 1 ? RepStatus::unique_up_to_scaling
                                                 : RepStatus::feasible_non_unique;
  return result;
}

SignedMeasure normalize(const SignedMeasure& mu) {
  if (mu.is_zero()) {
    throw ContractError("cannot normalize the zero measure (degenerate input)");
  }
  const Rat scale = std::max(mu.positive_mass(), mu.negative_mass());
  std::vector<Rat> weights(mu.weights());
  for (Rat& w : weights) w /= scale;
  return SignedMeasure(mu.algebra(), std::move(weights));
}

std::vector<Event> measure_atoms(const SignedMeasure& mu, std::size_t cap) {
  const Algebra& algebra = mu.algebra();
  if (algebra.atom_count() > cap) {
    throw CapacityError("measure-atom scan over " + std::to_string(algebra.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Rat> value(algebra.event_count());
  for (std::uint64_t bits = 1; bits < algebra.event_count(); ++bits) {
    const unsigned low = std::countr_zero(bits);
    value[bits] = value[bits & (bits - 1)] + mu.weight(low);
  }
  std::vector<Event> atoms;
  for (std::uint64_t bits = 1; bits < algebra.event_count(); ++bits) {
    if (value[bits] == 0) continue;
    bool splits = false;
    const std::uint32_t mask = static_cast<std::uint32_t>(bits);
    for (std::uint32_t sub = 0;; sub = ((sub | ~mask) + 1) & mask) {
      if (value[sub] != 0 && value[sub] != value[bits]) {
        splits = true;
        break;
      }
      if (sub == mask) break;
    }
    if (!splits) atoms.push_back(algebra.event(mask));
  }
  return atoms;
}

}  // namespace qprob
