#pragma once

// Shared helpers for the test binaries.  All randomness is seeded locally so
// every run is reproducible; there is no external seed control.

#include <chrono>
#include <random>
#include <vector>

#include "qprob/algebra.hpp"
#include "qprob/assessment.hpp"
#include "qprob/measure.hpp"

namespace qprob::testing {

// mpq_class(n, d) stores the fraction as given; comparisons need the reduced
// form, so every constructed rational goes through canonicalize().
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline SignedMeasure measure_of_weights(const Algebra& algebra, const std::vector<Rat>& w) {
  return SignedMeasure(algebra, w);
}

// Uniform numerator in [-span, span], denominator in [1, max_den].
inline Rat random_rational(std::mt19937_64& rng, long span = 12, long max_den = 8) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

inline SignedMeasure random_measure(std::mt19937_64& rng, const Algebra& algebra, long span = 12,
                                    long max_den = 8) {
  std::vector<Rat> w(algebra.atom_count());
  for (auto& x : w) x = random_rational(rng, span, max_den);
  return SignedMeasure(algebra, w);
}

// Nonzero measure with total exactly zero: the last atom balances the rest.
// Optionally plants a zero weight so Hahn enumeration has work to do.
inline SignedMeasure random_balanced_measure(std::mt19937_64& rng, const Algebra& algebra,
                                             bool plant_zero) {
  const std::size_t n = algebra.atom_count();
  while (true) {
    std::vector<Rat> w(n);
    Rat sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      w[i] = random_rational(rng, 6, 6);
      sum += w[i];
    }
    w[n - 1] = -sum;
    if (plant_zero && n >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 2);
      const std::size_t z = pick(rng);
      w[n - 1] += w[z];
      w[z] = 0;
    }
    SignedMeasure mu(algebra, w);
    if (!mu.is_zero()) return mu;
  }
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qprob::testing
