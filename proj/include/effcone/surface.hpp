#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "effcone/lattice.hpp"
#include "effcone/numerics.hpp"

namespace effcone {

// The weighted projective plane P(a, b, c) with a < b < c pairwise coprime,
// together with the decomposition c = p*a + q*b, 0 <= q < a.
class WeightedSurface {
 public:
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  // s = b/c
  const Rational& s() const { return s_; }

  std::string label() const;

  friend bool operator==(const WeightedSurface& x, const WeightedSurface& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  friend WeightedSurface make_surface(std::int64_t a, std::int64_t b, std::int64_t c);
  WeightedSurface(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p, std::int64_t q)
      : a_(a), b_(b), c_(c), p_(p), q_(q), s_(b, c) {}

  std::int64_t a_, b_, c_, p_, q_;
  Rational s_;
};

// Validates (a, b, c) and computes p, q. Throws PreconditionError on
// non-coprime or non-increasing weights.
WeightedSurface make_surface(std::int64_t a, std::int64_t b, std::int64_t c);

// Divisor families:
//   B  : n*b*D_x ~ (n/c) H
//   C  : n*c*D_x ~ (n/b) H
//   AZ : n*a*D_z ~ (n/b) H
enum class Family { B, C, AZ };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct DivisorSpec {
  Family family;
  std::int64_t n;
};

// The section polytope P_D, so that h0(D) = |P_D ∩ Z²|. Families B and C are
// only defined for a = 4.
RationalTriangle polytope(const WeightedSurface& s, const DivisorSpec& d);

std::int64_t h0(const WeightedSurface& s, const DivisorSpec& d);

}  // namespace effcone
