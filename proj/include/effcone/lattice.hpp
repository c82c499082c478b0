#pragma once

#include <cstdint>
#include <iosfwd>

#include "effcone/numerics.hpp"

namespace effcone {

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Conv(v0, v1, v2). Collinear or coincident vertices are allowed; such a
// "triangle" is the segment or point they span.
struct RationalTriangle {
  RationalPoint v0;
  RationalPoint v1;
  RationalPoint v2;

  friend bool operator==(const RationalTriangle&, const RationalTriangle&) = default;
};

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);
std::ostream& operator<<(std::ostream& os, const RationalTriangle& t);

// Twice the signed area (cross product of v1 - v0 and v2 - v0).
Rational doubled_signed_area(const RationalTriangle& t);

bool is_degenerate(const RationalTriangle& t);
bool is_integral(const RationalTriangle& t);

// Closed containment, exact.
bool contains(const RationalTriangle& t, const RationalPoint& p);

// Number of integer rows above which count_points_rowscan prints a warning.
inline constexpr std::int64_t kRowscanWarnRows = 100'000'000;

// |Conv(t) ∩ Z²| by scanning integer rows y and intersecting each horizontal
// line with the triangle boundary exactly. Never fails, including on
// degenerate input.
std::int64_t count_points_rowscan(const RationalTriangle& t);

// |Conv(t) ∩ Z²| = A + B/2 + 1 for an integral, non-degenerate triangle.
// Anything else is a PreconditionError (use the row scan instead).
std::int64_t count_points_pick(const RationalTriangle& t);

}  // namespace effcone
