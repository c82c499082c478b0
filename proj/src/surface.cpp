#include "effcone/surface.hpp"

#include <numeric>
#include <stdexcept>

namespace effcone {

std::string WeightedSurface::label() const {
  return "P(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
}

WeightedSurface make_surface(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::string tag =
      "P(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  if (a < 1 || b < 1 || c < 1) throw PreconditionError(tag + ": weights must be positive");
  if (!(a < b && b < c)) throw PreconditionError(tag + ": weights must satisfy a < b < c");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw PreconditionError(tag + ": weights must be pairwise coprime");
  }
  const std::int64_t q = mod_floor(mod_floor(c, a) * mod_inverse(b, a), a);
  const std::int64_t p = (c - q * b) / a;
  if (p * a + q * b != c) throw std::logic_error(tag + ": failed to decompose c = pa + qb");
  if (p < 0 && q == 1) throw std::logic_error(tag + ": p < 0 with q = 1");
  if (a == 4 && p < 0 && q != 3) throw std::logic_error(tag + ": a = 4, p < 0 but q != 3");
  return WeightedSurface(a, b, c, p, q);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::AZ: return "AZ";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "AZ" || text == "az") return Family::AZ;
  throw PreconditionError("unknown divisor family '" + std::string(text) + "' (expected B, C or AZ)");
}

RationalTriangle polytope(const WeightedSurface& s, const DivisorSpec& d) {
  if (d.n < 1) throw PreconditionError("divisor multiple n must be positive");
  const Rational n(d.n);
  const RationalPoint origin{Rational(0), Rational(0)};
  switch (d.family) {
    case Family::B:
    case Family::C:
      if (s.a() != 4 || s.q() != 3) {
        throw PreconditionError(s.label() + ": families B and C need a = 4 and q = 3");
      }
      if (d.family == Family::B) {
        return {origin, {-n, Rational(0)}, {Rational(-3) * n * s.s(), Rational(4) * n * s.s()}};
      }
      return {origin, {-n / s.s(), Rational(0)}, {Rational(-3) * n, Rational(4) * n}};
    case Family::AZ: {
      const Rational depth = Rational(-s.a()) * n;
      return {origin,
              {Rational(s.q()) * n, depth},
              {Rational(-s.p() * s.a(), s.b()) * n, depth}};
    }
  }
  throw std::logic_error("unreachable family");
}

std::int64_t h0(const WeightedSurface& s, const DivisorSpec& d) {
  return count_points_rowscan(polytope(s, d));
}

}  // namespace effcone
