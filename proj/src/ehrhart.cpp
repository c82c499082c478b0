#include "effcone/ehrhart.hpp"

#include "effcone/fracsum.hpp"

namespace effcone {

namespace {

void require_theorem_surface(const WeightedSurface& s, std::int64_t n) {
  if (s.a() != 4 || s.p() >= 0) {
    throw PreconditionError(s.label() + ": closed-form coefficients need a = 4 and p < 0");
  }
  if (n < 1) throw PreconditionError("n must be positive");
}

std::int64_t floor_4sn(const WeightedSurface& s, std::int64_t n) {
  return to_int64(floor(Rational(4 * n) * s.s()));
}

// ((b-1)/2){4n/c} - Σ_{j=0}^{⌊4sn⌋ mod b} {(-p)j/b}, shared by c0 and its bound.
Rational b_tail(const WeightedSurface& s, std::int64_t n) {
  const Rational quarter_turn = frac(Rational(4 * n, s.c()));
  return Rational(s.b() - 1, 2) * quarter_turn -
         frac_sum(-s.p(), s.b(), mod_floor(floor_4sn(s, n), s.b()));
}

}  // namespace

Rational EhrhartCoeffs::value() const {
  const Rational nn(n);
  return c2 * nn * nn + c1 * nn + c0;
}

EhrhartCoeffs coeffs(const WeightedSurface& s, Family family, std::int64_t n) {
  require_theorem_surface(s, n);
  EhrhartCoeffs out;
  out.n = n;
  out.family = family;
  const Rational& sv = s.s();
  switch (family) {
    case Family::B:
      out.c2 = Rational(2) * sv;
      out.c1 = (Rational(1) + sv + Rational(4, s.c())) / Rational(2);
      out.c0 = Rational(1) + c0_first_term(s, n) + c0_term34(s, n) + b_tail(s, n);
      return out;
    case Family::C: {
      out.c2 = Rational(2) / sv;
      out.c1 = (Rational(1) + Rational(1) / sv + Rational(4, s.b())) / Rational(2);
      const Rational f = frac(Rational(4 * n, s.b()));
      out.c0 = Rational(1) - f - Rational(s.b() - 1, 2) * f +
               frac_sum(-s.p(), s.b(), mod_floor(4 * n, s.b()));
      return out;
    }
    case Family::AZ:
      break;
  }
  throw PreconditionError("closed-form coefficients exist only for families B and C");
}

Rational c0_term34(const WeightedSurface& s, std::int64_t n) {
  require_theorem_surface(s, n);
  const Rational sn = Rational(n) * s.s();
  return Rational(-5, 2) * frac(sn) + frac_sum(3, 4, mod_floor(floor_4sn(s, n), 4));
}

Rational c0_first_term(const WeightedSurface& s, std::int64_t n) {
  require_theorem_surface(s, n);
  const Rational f = frac(Rational(4 * n) * s.s());
  return -(f * f - f) / (Rational(8) * s.s());
}

Rational first_term_bound(const WeightedSurface& s) {
  return Rational(1) / (Rational(32) * s.s());
}

Rational c0_upper_bound(const WeightedSurface& s, std::int64_t n) {
  require_theorem_surface(s, n);
  const Rational sn_frac = frac(Rational(n) * s.s());
  const Rational cutoff = Rational(1, 2) + Rational(1) / (Rational(80) * s.s());
  const Rational lead =
      sn_frac >= cutoff ? Rational(1) : Rational(9, 8) + first_term_bound(s);
  return lead + b_tail(s, n);
}

}  // namespace effcone
