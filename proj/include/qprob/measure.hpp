#pragma once

#include <vector>

#include "qprob/algebra.hpp"
#include "qprob/rational.hpp"

namespace qprob {

// A finitely additive signed measure on a power-set algebra, determined by
// one exact rational weight per atom.  Linear-combination operators require
// both operands to share an algebra.
class SignedMeasure {
public:
  SignedMeasure(Algebra algebra, std::vector<Rat> atom_weights);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Rat>& weights() const noexcept { return weights_; }
  const Rat& weight(std::size_t atom) const;

  Rat value(const Event& event) const;  // StructuralError on foreign events
  Rat total() const;                    // value of the full event

  bool is_zero() const;
  bool is_probability() const;  // nonnegative weights, total exactly 1

  // Sum of positive weights and (negated) sum of negative weights.
  Rat positive_mass() const;
  Rat negative_mass() const;

  friend SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b);
  friend SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b);
  friend SignedMeasure operator*(const Rat& scale, const SignedMeasure& m);
  friend bool operator==(const SignedMeasure& a, const SignedMeasure& b);
  friend bool operator!=(const SignedMeasure& a, const SignedMeasure& b) { return !(a == b); }

private:
  Algebra algebra_;
  std::vector<Rat> weights_;
};

}  // namespace qprob
