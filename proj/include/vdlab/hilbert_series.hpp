#pragma once

#include <string>

#include "vdlab/unipoly.hpp"

namespace vdlab {

// Hilbert series numerator/(1-t)^denom_power. Two useful shapes:
//   raw:       denom_power == number of ring variables,
//   canonical: numerator not divisible by (1-t) (or the zero series).
// The unit-ideal quotient is the zero series.
struct HilbertSeries {
  UniPoly numerator;
  int denom_power = 0;

  bool is_zero() const { return numerator.is_zero(); }

  HilbertSeries canonicalized() const;
  // Re-expresses over (1-t)^power; power must be >= the canonical denominator.
  HilbertSeries raw(int power) const;

  // P(1) of the canonical numerator; 0 for the zero series.
  Int degree() const;
  // Canonical denominator exponent = Krull dimension of the quotient for a
  // nonzero series.
  int dimension() const { return canonicalized().denom_power; }

  // Coefficient of t^n in the expansion (exact).
  Int series_coefficient(int n) const;

  bool operator==(const HilbertSeries& o) const;
  std::string to_string() const;
};

}  // namespace vdlab
