#pragma once

#include <vector>

#include "qprob/rational.hpp"

namespace qprob {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

// In-place Gauss–Jordan reduction with exact rational pivots.  Pivot columns
// are chosen by scanning `column_order` left to right; the return value lists
// the pivot columns in elimination order.
std::vector<std::size_t> reduced_row_echelon(RatMatrix& rows,
                                             const std::vector<std::size_t>& column_order);

// Basis of the solution space of rows·x = 0 over `num_vars` variables.  One
// basis vector per free variable (free = not a pivot under `column_order`);
// the spanned subspace does not depend on the order, the basis does.
RatMatrix null_space_basis(const RatMatrix& rows, std::size_t num_vars,
                           const std::vector<std::size_t>& column_order);

// Decides whether some y ∈ Q^num_vars satisfies rows[i]·y ≥ 1 for every i,
// by a phase-1 simplex with Bland's rule (terminates, exact).  On success
// `point` is a witness.
struct StrictFeasibility {
  bool feasible = false;
  RatVec point;
};

StrictFeasibility satisfy_unit_gaps(const RatMatrix& rows, std::size_t num_vars);

}  // namespace qprob
