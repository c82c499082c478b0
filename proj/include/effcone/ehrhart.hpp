#pragma once

#include <cstdint>

#include "effcone/numerics.hpp"
#include "effcone/surface.hpp"

namespace effcone {

// h0(n·δ·D_x) = c2·n² + c1·n + c0 for δ = b (family B) or δ = c (family C).
struct EhrhartCoeffs {
  Rational c2;
  Rational c1;
  Rational c0;
  std::int64_t n = 0;
  Family family = Family::B;

  Rational value() const;
};

// Closed-form coefficients on P(4, b, c) with p < 0. Throws PreconditionError
// for other surfaces, for family AZ, or for n < 1.
EhrhartCoeffs coeffs(const WeightedSurface& s, Family family, std::int64_t n);

// -(5/2){sn} + Σ_{j=0}^{ℓ} {3j/4}, ℓ = ⌊4sn⌋ mod 4.
Rational c0_term34(const WeightedSurface& s, std::int64_t n);

// -({4sn}² - {4sn})/(8s), bounded above by first_term_bound = 1/(32s).
Rational c0_first_term(const WeightedSurface& s, std::int64_t n);
Rational first_term_bound(const WeightedSurface& s);

// Upper bound for c0 of family B:
//   K + ((b-1)/2){4n/c} - Σ_{j=0}^{⌊4sn⌋ mod b} {(-p)j/b}
// with K = 1 when {sn} >= 1/2 + 1/(80s) and K = 9/8 + 1/(32s) otherwise.
Rational c0_upper_bound(const WeightedSurface& s, std::int64_t n);

}  // namespace effcone
