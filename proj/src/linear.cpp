#include "qprob/linear.hpp"

#include <cstddef>

#include "qprob/error.hpp"

namespace qprob {

std::vector<std::size_t> reduced_row_echelon(RatMatrix& rows,
                                             const std::vector<std::size_t>& column_order) {
  std::vector<std::size_t> pivot_columns;
  std::size_t next_row = 0;
  for (std::size_t col : column_order) {
    if (next_row == rows.size()) break;
    std::size_t pivot_row = next_row;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot_row]);
    const Rat inverse = Rat(1) / rows[next_row][col];
    for (Rat& entry : rows[next_row]) entry *= inverse;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rat factor = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= factor * rows[next_row][c];
    }
    pivot_columns.push_back(col);
    ++next_row;
  }
  return pivot_columns;
}

RatMatrix null_space_basis(const RatMatrix& rows, std::size_t num_vars,
                           const std::vector<std::size_t>& column_order) {
  RatMatrix reduced(rows);
  for (const RatVec& row : reduced) {
    if (row.size() != num_vars) throw StructuralError("null space: inconsistent row width");
  }
  const std::vector<std::size_t> pivots = reduced_row_echelon(reduced, column_order);
  std::vector<bool> is_pivot(num_vars, false);
  for (std::size_t col : pivots) is_pivot[col] = true;

  RatMatrix basis;
  for (std::size_t free_col = 0; free_col < num_vars; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec vec(num_vars, Rat(0));
    vec[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      vec[pivots[r]] = -reduced[r][free_col];
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

namespace {

// Dense phase-1 simplex tableau for: find y with R·y ≥ 1.
// Split y = y⁺ − y⁻ (both ≥ 0), add surplus s and artificials a:
//   R y⁺ − R y⁻ − s + a = 1,   y⁺, y⁻, s, a ≥ 0,   minimize Σa.
// The all-ones right-hand side keeps the artificial basis feasible from the
// start; Bland's rule (lowest index enters, lowest basic index leaves on
// ties) guarantees termination.
class PhaseOneTableau {
public:
  PhaseOneTableau(const RatMatrix& rows, std::size_t num_vars)
      : m_(rows.size()), d_(num_vars), cols_(2 * num_vars + 2 * rows.size()) {
    table_.assign(m_, RatVec(cols_ + 1, Rat(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) {
        table_[i][j] = rows[i][j];
        table_[i][d_ + j] = -rows[i][j];
      }
      table_[i][2 * d_ + i] = -1;       // surplus
      table_[i][2 * d_ + m_ + i] = 1;   // artificial
      table_[i][cols_] = 1;             // rhs
      basis_[i] = 2 * d_ + m_ + i;
    }
  }

  // Runs to optimality and reports whether all artificials reached zero.
  bool solve() {
    while (true) {
      const std::size_t entering = pick_entering();
      if (entering == cols_) break;  // optimal
      const std::size_t leaving_row = pick_leaving(entering);
      // Unbounded phase-1 objectives cannot happen (bounded below by 0),
      // so a leaving row always exists.
      pivot(leaving_row, entering);
    }
    Rat objective = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= 2 * d_ + m_) objective += table_[i][cols_];
    }
    return objective == 0;
  }

  RatVec extract_point() const {
    RatVec y(d_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < d_) {
        y[basis_[i]] += table_[i][cols_];
      } else if (basis_[i] < 2 * d_) {
        y[basis_[i] - d_] -= table_[i][cols_];
      }
    }
    return y;
  }

private:
  // Reduced cost of column j for the phase-1 objective (cost 1 on
  // artificials, 0 elsewhere): c_j − Σ_{i basic artificial} T[i][j].
  Rat reduced_cost(std::size_t j) const {
    Rat cost = (j >= 2 * d_ + m_) ? 1 : 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= 2 * d_ + m_) cost -= table_[i][j];
    }
    return cost;
  }

  std::size_t pick_entering() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (reduced_cost(j) < 0) return j;  // Bland: first improving column
    }
    return cols_;
  }

  std::size_t pick_leaving(std::size_t entering) const {
    std::size_t best = m_;
    Rat best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      if (table_[i][entering] <= 0) continue;
      Rat ratio = table_[i][cols_] / table_[i][entering];
      if (best == m_ || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    if (best == m_) throw Error("phase-1 simplex: unexpected unbounded direction");
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inverse = Rat(1) / table_[row][col];
    for (Rat& entry : table_[row]) entry *= inverse;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || table_[r][col] == 0) continue;
      const Rat factor = table_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) table_[r][c] -= factor * table_[row][c];
    }
    basis_[row] = col;
  }

  std::size_t m_, d_, cols_;
  RatMatrix table_;
  std::vector<std::size_t> basis_;
};

}  // namespace

StrictFeasibility satisfy_unit_gaps(const RatMatrix& rows, std::size_t num_vars) {
  for (const RatVec& row : rows) {
    if (row.size() != num_vars) throw StructuralError("feasibility: inconsistent row width");
  }
  StrictFeasibility out;
  if (rows.empty()) {
    out.feasible = true;
    out.point.assign(num_vars, Rat(0));
    return out;
  }
  PhaseOneTableau tableau(rows, num_vars);
  out.feasible = tableau.solve();
  if (out.feasible) out.point = tableau.extract_point();
  return out;
}

}  // namespace qprob
