#include "qprob/measure.hpp"

#include "qprob/error.hpp"

namespace qprob {

SignedMeasure::SignedMeasure(Algebra algebra, std::vector<Rat> atom_weights)
    : algebra_(std::move(algebra)), weights_(std::move(atom_weights)) {
  if (weights_.size() != algebra_.atom_count()) {
    throw StructuralError("measure needs one weight per atom: got " +
                          std::to_string(weights_.size()) + " weights for " +
                          std::to_string(algebra_.atom_count()) + " atoms");
  }
}

const Rat& SignedMeasure::weight(std::size_t atom) const {
  if (atom >= weights_.size()) {
    throw StructuralError("atom index " + std::to_string(atom) + " out of range");
  }
  return weights_[atom];
}

Rat SignedMeasure::value(const Event& event) const {
  if (event.algebra() != algebra_) {
    throw StructuralError("event belongs to a different algebra than the measure");
  }
  Rat sum = 0;
  const std::uint32_t bits = event.bits();
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if ((bits >> i) & 1u) sum += weights_[i];
  }
  return sum;
}

Rat SignedMeasure::total() const { return value(algebra_.full_event()); }

bool SignedMeasure::is_zero() const {
  for (const Rat& w : weights_) {
    if (w != 0) return false;
  }
  return true;
}

bool SignedMeasure::is_probability() const {
  for (const Rat& w : weights_) {
    if (w < 0) return false;
  }
  return total() == 1;
}

Rat SignedMeasure::positive_mass() const {
  Rat sum = 0;
  for (const Rat& w : weights_) {
    if (w > 0) sum += w;
  }
  return sum;
}

Rat SignedMeasure::negative_mass() const {
  Rat sum = 0;
  for (const Rat& w : weights_) {
    if (w < 0) sum -= w;
  }
  return sum;
}

namespace {

void require_same_algebra(const SignedMeasure& a, const SignedMeasure& b, const char* context) {
  if (a.algebra() != b.algebra()) {
    throw StructuralError(std::string("measures on different algebras in ") + context);
  }
}

}  // namespace

SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b) {
  require_same_algebra(a, b, "measure addition");
  std::vector<Rat> weights(a.weights_);
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += b.weights_[i];
  return SignedMeasure(a.algebra_, std::move(weights));
}

SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b) {
  require_same_algebra(a, b, "measure subtraction");
  std::vector<Rat> weights(a.weights_);
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] -= b.weights_[i];
  return SignedMeasure(a.algebra_, std::move(weights));
}

SignedMeasure operator*(const Rat& scale, const SignedMeasure& m) {
  std::vector<Rat> weights(m.weights_);
  for (Rat& w : weights) w *= scale;
  return SignedMeasure(m.algebra_, std::move(weights));
}

bool operator==(const SignedMeasure& a, const SignedMeasure& b) {
  return a.algebra_ == b.algebra_ && a.weights_ == b.weights_;
}

}  // namespace qprob
