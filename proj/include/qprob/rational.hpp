#pragma once

#include <gmpxx.h>

#include <string>

namespace qprob {

// All arithmetic in this library is exact.  Rat is a GMP rational kept in
// canonical form (lowest terms, sign on the numerator); every value produced
// by parse_rational or by arithmetic on canonical operands stays canonical.
using Rat = mpq_class;

// Accepts "p" or "p/q" with optional leading '-' on p; q must be a positive
// integer.  Throws ParseError on anything else (including "1/0", whitespace,
// decimals).
Rat parse_rational(const std::string& text);

// Canonical text form: lowest terms, "p" when the denominator is 1, else
// "p/q" with the sign on the numerator.
std::string format_rational(const Rat& value);

inline int sign_of(const Rat& value) { return sgn(value); }

}  // namespace qprob
