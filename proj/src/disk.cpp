#include "qprob/disk.hpp"

#include <algorithm>

#include "qprob/error.hpp"

namespace qprob {

PolarGrid::PolarGrid(std::vector<Rat> ring_bounds_sq, std::size_t n_sectors) {
  if (ring_bounds_sq.size() < 2) {
    throw StructuralError("grid needs at least two ring bounds");
  }
  if (ring_bounds_sq.front() != 0 || ring_bounds_sq.back() != 1) {
    throw StructuralError("grid ring bounds must run from 0 to 1 (squared radii)");
  }
  for (std::size_t i = 0; i + 1 < ring_bounds_sq.size(); ++i) {
    if (!(ring_bounds_sq[i] < ring_bounds_sq[i + 1])) {
      throw StructuralError("grid ring bounds must be strictly increasing");
    }
  }
  if (n_sectors == 0) throw StructuralError("grid needs at least one sector");
  const Rat quarter(1, 4);
  std::size_t bullseye_end = 0;
  for (std::size_t i = 0; i < ring_bounds_sq.size(); ++i) {
    if (ring_bounds_sq[i] == quarter) bullseye_end = i;
  }
  if (bullseye_end == 0) {
    throw StructuralError("grid does not contain the bullseye boundary "
                          "(squared radius 1/4 must be a ring bound)");
  }
  auto data = std::make_shared<Data>();
  data->bounds_sq = std::move(ring_bounds_sq);
  data->sectors = n_sectors;
  data->bullseye_end = bullseye_end;
  data_ = std::move(data);
}

PolarGrid PolarGrid::default_grid() {
  return PolarGrid({Rat(0), Rat(1, 4), Rat(1)}, 4);
}

std::size_t PolarGrid::ring_count() const noexcept { return data_->bounds_sq.size() - 1; }

std::size_t PolarGrid::sector_count() const noexcept { return data_->sectors; }

const std::vector<Rat>& PolarGrid::ring_bounds_sq() const noexcept { return data_->bounds_sq; }

std::size_t PolarGrid::cell_index(std::size_t ring, std::size_t sector) const {
  if (ring >= ring_count() || sector >= sector_count()) {
    throw StructuralError("cell (" + std::to_string(ring) + "," + std::to_string(sector) +
                          ") outside the grid");
  }
  return ring * sector_count() + sector;
}

std::pair<std::size_t, std::size_t> PolarGrid::cell_coords(std::size_t index) const {
  if (index >= cell_count()) throw StructuralError("cell index out of range");
  return {index / sector_count(), index % sector_count()};
}

Rat PolarGrid::cell_area(std::size_t index) const {
  const std::size_t ring = cell_coords(index).first;
  return (data_->bounds_sq[ring + 1] - data_->bounds_sq[ring]) / Rat(data_->sectors);
}

std::size_t PolarGrid::bullseye_ring_end() const noexcept { return data_->bullseye_end; }

bool operator==(const PolarGrid& a, const PolarGrid& b) {
  return a.data_ == b.data_ ||
         (a.data_->bounds_sq == b.data_->bounds_sq && a.data_->sectors == b.data_->sectors);
}

namespace {

void require_same_grid(const PolarGrid& a, const PolarGrid& b, const char* context) {
  if (a != b) throw StructuralError(std::string("different grids in ") + context);
}

}  // namespace

Region Region::empty(const PolarGrid& grid) {
  return Region(grid, std::vector<bool>(grid.cell_count(), false));
}

Region Region::full(const PolarGrid& grid) {
  return Region(grid, std::vector<bool>(grid.cell_count(), true));
}

Region Region::bullseye(const PolarGrid& grid) {
  std::vector<bool> cells(grid.cell_count(), false);
  for (std::size_t ring = 0; ring < grid.bullseye_ring_end(); ++ring) {
    for (std::size_t sector = 0; sector < grid.sector_count(); ++sector) {
      cells[grid.cell_index(ring, sector)] = true;
    }
  }
  return Region(grid, std::move(cells));
}

Region Region::of_cells(const PolarGrid& grid,
                        const std::vector<std::pair<std::size_t, std::size_t>>& cell_list) {
  std::vector<bool> cells(grid.cell_count(), false);
  for (const auto& [ring, sector] : cell_list) cells[grid.cell_index(ring, sector)] = true;
  return Region(grid, std::move(cells));
}

bool Region::contains(std::size_t cell) const {
  if (cell >= cells_.size()) throw StructuralError("cell index out of range");
  return cells_[cell];
}

bool Region::is_empty() const {
  return std::find(cells_.begin(), cells_.end(), true) == cells_.end();
}

std::size_t Region::cell_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), true));
}

std::vector<std::size_t> Region::cell_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i]) out.push_back(i);
  }
  return out;
}

Region Region::complement() const {
  std::vector<bool> cells(cells_);
  cells.flip();
  return Region(grid_, std::move(cells));
}

bool Region::subset_of(const Region& other) const {
  require_same_grid(grid_, other.grid_, "subset test");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] && !other.cells_[i]) return false;
  }
  return true;
}

bool Region::disjoint_with(const Region& other) const {
  require_same_grid(grid_, other.grid_, "disjointness test");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] && other.cells_[i]) return false;
  }
  return true;
}

Region region_union(const Region& a, const Region& b) {
  require_same_grid(a.grid_, b.grid_, "union");
  std::vector<bool> cells(a.cells_);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = cells[i] || b.cells_[i];
  return Region(a.grid_, std::move(cells));
}

Region region_intersection(const Region& a, const Region& b) {
  require_same_grid(a.grid_, b.grid_, "intersection");
  std::vector<bool> cells(a.cells_);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = cells[i] && b.cells_[i];
  return Region(a.grid_, std::move(cells));
}

Region region_difference(const Region& a, const Region& b) {
  require_same_grid(a.grid_, b.grid_, "difference");
  std::vector<bool> cells(a.cells_);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = cells[i] && !b.cells_[i];
  return Region(a.grid_, std::move(cells));
}

bool operator==(const Region& a, const Region& b) {
  return a.grid_ == b.grid_ && a.cells_ == b.cells_;
}

DiskMeasure::DiskMeasure(PolarGrid grid, std::vector<Rat> cell_mass)
    : grid_(std::move(grid)), mass_(std::move(cell_mass)) {
  if (mass_.size() != grid_.cell_count()) {
    throw StructuralError("disk measure needs one mass per cell: got " +
                          std::to_string(mass_.size()) + " for " +
                          std::to_string(grid_.cell_count()) + " cells");
  }
}

const Rat& DiskMeasure::cell_mass(std::size_t cell) const {
  if (cell >= mass_.size()) throw StructuralError("cell index out of range");
  return mass_[cell];
}

Rat DiskMeasure::value(const Region& r) const {
  require_same_grid(grid_, r.grid(), "measure evaluation");
  Rat sum = 0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (r.contains(i)) sum += mass_[i];
  }
  return sum;
}

Rat DiskMeasure::total() const {
  Rat sum = 0;
  for (const Rat& m : mass_) sum += m;
  return sum;
}

DiskMeasure operator+(const DiskMeasure& a, const DiskMeasure& b) {
  require_same_grid(a.grid_, b.grid_, "measure addition");
  std::vector<Rat> mass(a.mass_);
  for (std::size_t i = 0; i < mass.size(); ++i) mass[i] += b.mass_[i];
  return DiskMeasure(a.grid_, std::move(mass));
}

DiskMeasure operator-(const DiskMeasure& a, const DiskMeasure& b) {
  require_same_grid(a.grid_, b.grid_, "measure subtraction");
  std::vector<Rat> mass(a.mass_);
  for (std::size_t i = 0; i < mass.size(); ++i) mass[i] -= b.mass_[i];
  return DiskMeasure(a.grid_, std::move(mass));
}

DiskMeasure operator*(const Rat& scale, const DiskMeasure& m) {
  std::vector<Rat> mass(m.mass_);
  for (Rat& entry : mass) entry *= scale;
  return DiskMeasure(m.grid_, std::move(mass));
}

bool operator==(const DiskMeasure& a, const DiskMeasure& b) {
  return a.grid_ == b.grid_ && a.mass_ == b.mass_;
}

ArcherySuite archery_measures(const PolarGrid& grid) {
  std::vector<Rat> uniform(grid.cell_count());
  for (std::size_t i = 0; i < uniform.size(); ++i) uniform[i] = grid.cell_area(i);
  DiskMeasure lebesgue(grid, std::move(uniform));

  const Region target = Region::bullseye(grid);
  DiskMeasure bullseye_cond = bayes_condition(lebesgue, target);
  DiskMeasure complement_cond = bayes_condition(lebesgue, target.complement());

  DiskMeasure very_high = (Rat(9, 10) * bullseye_cond) + (Rat(1, 10) * complement_cond);
  DiskMeasure high = (Rat(77, 100) * bullseye_cond) + (Rat(23, 100) * complement_cond);
  DiskMeasure low = (Rat(1, 4) * bullseye_cond) + (Rat(3, 4) * complement_cond);
  DiskMeasure very_low = complement_cond;

  return {grid,      target, std::move(lebesgue),  std::move(bullseye_cond),
          std::move(complement_cond), std::move(very_high), std::move(high),
          std::move(low),    std::move(very_low)};
}

DiskMeasure bayes_condition(const DiskMeasure& m, const Region& e) {
  require_same_grid(m.grid(), e.grid(), "conditioning");
  const Rat mass = m.value(e);
  if (!(mass > 0)) {
    throw ContractError("conditioning on a region of mass " + format_rational(mass) +
                        " (must be positive)");
  }
  std::vector<Rat> cell_mass(m.grid().cell_count(), Rat(0));
  for (std::size_t i = 0; i < cell_mass.size(); ++i) {
    if (e.contains(i)) cell_mass[i] = m.cell_mass(i) / mass;
  }
  return DiskMeasure(m.grid(), std::move(cell_mass));
}

DiskMeasure jeffrey(const DiskMeasure& m, const Region& e, const Rat& new_mass) {
  require_same_grid(m.grid(), e.grid(), "Jeffrey update");
  const Rat mass = m.value(e);
  if (!(mass > 0 && mass < 1)) {
    throw ContractError("Jeffrey update needs the region's current mass in (0,1); it is " +
                        format_rational(mass));
  }
  if (new_mass < 0 || new_mass > 1) {
    throw ContractError("Jeffrey update needs the new mass in [0,1]; it is " +
                        format_rational(new_mass));
  }
  return (new_mass * bayes_condition(m, e)) +
         ((1 - new_mass) * bayes_condition(m, e.complement()));
}

Rat score(const ArcherySuite& suite, const Region& a) {
  return suite.very_low.value(a) - suite.high.value(a);
}

DiskMeasure score_measure(const ArcherySuite& suite) { return suite.very_low - suite.high; }

Algebra cell_algebra(const PolarGrid& grid) {
  std::vector<std::string> labels;
  labels.reserve(grid.cell_count());
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const auto [ring, sector] = grid.cell_coords(i);
    labels.push_back("r" + std::to_string(ring) + "s" + std::to_string(sector));
  }
  return Algebra(std::move(labels));
}

SignedMeasure export_to_algebra(const DiskMeasure& m) {
  return SignedMeasure(cell_algebra(m.grid()), m.cell_masses());
}

Event region_event(const Algebra& cells, const Region& r) {
  if (cells.atom_count() != r.grid().cell_count()) {
    throw StructuralError("cell algebra does not match the region's grid");
  }
  std::uint32_t bits = 0;
  for (std::size_t i : r.cell_indices()) bits |= std::uint32_t{1} << i;
  return cells.event(bits);
}

Region event_region(const PolarGrid& grid, const Event& e) {
  if (e.algebra().atom_count() != grid.cell_count()) {
    throw StructuralError("event's algebra does not match the grid's cell count");
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i : e.atom_indices()) cells.push_back(grid.cell_coords(i));
  return Region::of_cells(grid, cells);
}

Rat swept_measure(const DiskMeasure& m, const SweptRegion& s) {
  require_same_grid(m.grid(), s.base.grid(), "swept measure");
  if (s.angle < 0 || s.angle > 1) {
    throw ContractError("sweep angle must lie in [0,1] as a fraction of the full turn");
  }
  const std::size_t sectors = m.grid().sector_count();
  Rat sum = 0;
  for (std::size_t cell : s.base.cell_indices()) {
    const std::size_t sector = m.grid().cell_coords(cell).second;
    // Fraction of this sector below the cut.
    Rat overlap = s.angle * Rat(sectors) - Rat(sector);
    if (overlap <= 0) continue;
    if (overlap > 1) overlap = 1;
    sum += m.cell_mass(cell) * overlap;
  }
  return sum;
}

SweptRegion knife(const DiskMeasure& m, const Region& a, const Rat& v) {
  require_same_grid(m.grid(), a.grid(), "knife");
  for (std::size_t i = 0; i < m.grid().cell_count(); ++i) {
    if (m.cell_mass(i) < 0) {
      throw ContractError("knife requires nonnegative cell masses");
    }
  }
  const Rat available = m.value(a);
  if (v < 0 || v > available) {
    throw ContractError("knife target " + format_rational(v) + " outside [0, " +
                        format_rational(available) + "]");
  }
  const std::size_t sectors = m.grid().sector_count();
  // Mass of a per sector, then invert the piecewise-linear sweep function at
  // the smallest angle reaching v.
  std::vector<Rat> sector_mass(sectors, Rat(0));
  for (std::size_t cell : a.cell_indices()) {
    sector_mass[m.grid().cell_coords(cell).second] += m.cell_mass(cell);
  }
  if (v == 0) return {a, Rat(0)};
  Rat before = 0;
  for (std::size_t sector = 0; sector < sectors; ++sector) {
    if (sector_mass[sector] > 0 && before + sector_mass[sector] >= v) {
      const Rat within = (v - before) / sector_mass[sector];
      return {a, (Rat(sector) + within) / Rat(sectors)};
    }
    before += sector_mass[sector];
  }
  // v ≤ m(a) and v > 0, so the loop above must have returned.
  throw Error("knife: sweep inversion failed to reach the target");
}

SweptRegion annulment_by_knife(const DiskMeasure& diff, const Region& a_plus,
                               const Region& a_minus) {
  require_same_grid(diff.grid(), a_plus.grid(), "annulment");
  require_same_grid(diff.grid(), a_minus.grid(), "annulment");
  if (!a_plus.disjoint_with(a_minus)) {
    throw ContractError("annulment requires disjoint parts");
  }
  for (std::size_t cell : a_plus.cell_indices()) {
    if (diff.cell_mass(cell) < 0) {
      throw ContractError("annulment requires the swept part to be non-negative cellwise");
    }
  }
  for (std::size_t cell : a_minus.cell_indices()) {
    if (diff.cell_mass(cell) > 0) {
      throw ContractError("annulment requires the canceled part to be non-positive cellwise");
    }
  }
  if (diff.value(region_union(a_plus, a_minus)) < 0) {
    throw ContractError("annulment requires diff(a_plus ∪ a_minus) ≥ 0: "
                        "the non-negative part cannot cover the deficit");
  }
  // Restrict diff to a_plus (nonnegative there) and sweep to the deficit.
  std::vector<Rat> restricted(diff.grid().cell_count(), Rat(0));
  for (std::size_t cell : a_plus.cell_indices()) restricted[cell] = diff.cell_mass(cell);
  return knife(DiskMeasure(diff.grid(), std::move(restricted)), a_plus, -diff.value(a_minus));
}

}  // namespace qprob
