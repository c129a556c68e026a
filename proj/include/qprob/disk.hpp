#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qprob/measure.hpp"
#include "qprob/rational.hpp"

namespace qprob {

// A finite partition of the unit disk into annular-sector cells: rings given
// by strictly increasing squared radii from 0 to 1 (squared so that uniform
// areas are rational — the π factor cancels everywhere), and equal angular
// sectors.  The squared radius 1/4 must appear among the bounds so that the
// bullseye (radius 1/2) is a union of cells; uniform mass 1/4 on it is what
// makes every published number of the archery story come out exactly.
class PolarGrid {
public:
  PolarGrid(std::vector<Rat> ring_bounds_sq, std::size_t n_sectors);

  static PolarGrid default_grid();  // squared bounds {0, 1/4, 1}, 4 sectors

  std::size_t ring_count() const noexcept;
  std::size_t sector_count() const noexcept;
  std::size_t cell_count() const noexcept { return ring_count() * sector_count(); }
  const std::vector<Rat>& ring_bounds_sq() const noexcept;

  std::size_t cell_index(std::size_t ring, std::size_t sector) const;
  std::pair<std::size_t, std::size_t> cell_coords(std::size_t index) const;

  // Fraction of the disk's area in one cell: (r²_hi − r²_lo) / n_sectors.
  Rat cell_area(std::size_t index) const;

  // Rings [0, bullseye_ring_end) make up the bullseye.
  std::size_t bullseye_ring_end() const noexcept;

  friend bool operator==(const PolarGrid& a, const PolarGrid& b);
  friend bool operator!=(const PolarGrid& a, const PolarGrid& b) { return !(a == b); }

private:
  struct Data {
    std::vector<Rat> bounds_sq;
    std::size_t sectors;
    std::size_t bullseye_end;
  };
  std::shared_ptr<const Data> data_;
};

// A union of grid cells.  Cross-grid operations throw StructuralError.
class Region {
public:
  static Region empty(const PolarGrid& grid);
  static Region full(const PolarGrid& grid);
  static Region bullseye(const PolarGrid& grid);
  static Region of_cells(const PolarGrid& grid,
                         const std::vector<std::pair<std::size_t, std::size_t>>& cells);

  const PolarGrid& grid() const noexcept { return grid_; }
  bool contains(std::size_t cell) const;
  bool is_empty() const;
  std::size_t cell_count() const;
  std::vector<std::size_t> cell_indices() const;  // ascending

  Region complement() const;
  bool subset_of(const Region& other) const;
  bool disjoint_with(const Region& other) const;

  friend Region region_union(const Region& a, const Region& b);
  friend Region region_intersection(const Region& a, const Region& b);
  friend Region region_difference(const Region& a, const Region& b);
  friend bool operator==(const Region& a, const Region& b);
  friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

private:
  Region(PolarGrid grid, std::vector<bool> cells)
      : grid_(std::move(grid)), cells_(std::move(cells)) {}

  PolarGrid grid_;
  std::vector<bool> cells_;
};

// A finitely additive measure on the grid cells, one exact rational mass per
// cell.  Signed in general; the conditioning operations require what their
// contracts state.
class DiskMeasure {
public:
  DiskMeasure(PolarGrid grid, std::vector<Rat> cell_mass);

  const PolarGrid& grid() const noexcept { return grid_; }
  const std::vector<Rat>& cell_masses() const noexcept { return mass_; }
  const Rat& cell_mass(std::size_t cell) const;

  Rat value(const Region& r) const;
  Rat total() const;

  friend DiskMeasure operator+(const DiskMeasure& a, const DiskMeasure& b);
  friend DiskMeasure operator-(const DiskMeasure& a, const DiskMeasure& b);
  friend DiskMeasure operator*(const Rat& scale, const DiskMeasure& m);
  friend bool operator==(const DiskMeasure& a, const DiskMeasure& b);
  friend bool operator!=(const DiskMeasure& a, const DiskMeasure& b) { return !(a == b); }

private:
  PolarGrid grid_;
  std::vector<Rat> mass_;
};

inline Rat measure_of(const DiskMeasure& m, const Region& r) { return m.value(r); }

// The archer's seven measures: uniform chance (the drunk shot), the two
// conditionals given bullseye / given its complement, and the four
// skill-mixture hypotheses ranked very high to very low.
struct ArcherySuite {
  PolarGrid grid;
  Region target;                // the bullseye
  DiskMeasure lebesgue;         // uniform on the disk
  DiskMeasure bullseye_cond;    // uniform given the bullseye
  DiskMeasure complement_cond;  // uniform given the rest of the disk
  DiskMeasure very_high;        // 9/10·bullseye_cond + 1/10·complement_cond
  DiskMeasure high;             // 77/100 and 23/100
  DiskMeasure low;              // 1/4 and 3/4 — identical to lebesgue
  DiskMeasure very_low;         // complement_cond itself
};

ArcherySuite archery_measures(const PolarGrid& grid = PolarGrid::default_grid());

// Masses restricted to e and rescaled by 1/m(e).  ContractError on m(e) ≤ 0.
DiskMeasure bayes_condition(const DiskMeasure& m, const Region& e);

// Belief revision that fixes the mass of e at new_mass and conditions within
// e and its complement: new_mass·(m|e) + (1−new_mass)·(m|∁e).
// ContractError unless m(e) ∈ (0,1) and new_mass ∈ [0,1].
DiskMeasure jeffrey(const DiskMeasure& m, const Region& e, const Rat& new_mass);

// The evidence gap very_low − high, as a number per region and as a signed
// cell measure.
Rat score(const ArcherySuite& suite, const Region& a);
DiskMeasure score_measure(const ArcherySuite& suite);

// Bridge to the finite modules: cells become atoms labeled "r<ring>s<sector>".
Algebra cell_algebra(const PolarGrid& grid);
SignedMeasure export_to_algebra(const DiskMeasure& m);
Event region_event(const Algebra& cells, const Region& r);
Region event_region(const PolarGrid& grid, const Event& e);

// base cut by the angular interval [0, angle·full turn): cells keep the
// fraction of their sector below the cut.  The measure of a swept region is
// piecewise linear and nondecreasing in the angle.
struct SweptRegion {
  Region base;
  Rat angle;  // fraction of the full turn, in [0, 1]
};

Rat swept_measure(const DiskMeasure& m, const SweptRegion& s);

// The minimal counterclockwise sweep of `a` carrying mass exactly v.
// Requires nonnegative cell masses and 0 ≤ v ≤ m(a); sweeps nest as v grows.
SweptRegion knife(const DiskMeasure& m, const Region& a, const Rat& v);

// Annulment construction: sweep the non-negative part until it exactly
// cancels the mass of the non-positive part, so the union of the result with
// a_minus has measure zero.  Preconditions (ContractError): disjoint parts,
// diff ≥ 0 cellwise on a_plus, ≤ 0 on a_minus, diff(a_plus ∪ a_minus) ≥ 0.
SweptRegion annulment_by_knife(const DiskMeasure& diff, const Region& a_plus,
                               const Region& a_minus);

}  // namespace qprob
