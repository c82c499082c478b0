#include "effcone/lattice.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <optional>
#include <vector>

namespace effcone {

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const RationalTriangle& t) {
  return os << "Conv(" << t.v0 << ',' << t.v1 << ',' << t.v2 << ')';
}

namespace {

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// x(y) = intercept + slope * y along a non-horizontal edge, valid for y in
// [y_lo, y_hi].
struct EdgeLine {
  Rational slope;
  Rational intercept;
  Rational y_lo;
  Rational y_hi;
};

// The same edge as x(y) = (p + q*y)/r in machine integers, valid for
// integer rows in [row_lo, row_hi].
struct FastEdge {
  std::int64_t p;
  std::int64_t q;
  std::int64_t r;
  std::int64_t row_lo;
  std::int64_t row_hi;
};

// Keeps p + q*y comfortably inside __int128.
constexpr std::int64_t kFastLimit = std::int64_t{1} << 60;

bool fits(const Integer& z) { return abs(z) < Integer(static_cast<long>(kFastLimit)); }

std::optional<FastEdge> make_fast(const EdgeLine& e) {
  const Integer sd = e.slope.denominator(), id = e.intercept.denominator();
  Integer r;
  mpz_lcm(r.get_mpz_t(), sd.get_mpz_t(), id.get_mpz_t());
  const Integer p = e.intercept.numerator() * (r / id);
  const Integer q = e.slope.numerator() * (r / sd);
  const Integer lo = ceil(e.y_lo), hi = floor(e.y_hi);
  if (!fits(p) || !fits(q) || !fits(r) || !fits(lo) || !fits(hi)) return std::nullopt;
  return FastEdge{to_int64(p), to_int64(q), to_int64(r), to_int64(lo), to_int64(hi)};
}

std::int64_t floor_div(__int128 num, std::int64_t den) {
  __int128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(__int128 num, std::int64_t den) {
  __int128 q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return static_cast<std::int64_t>(q);
}

}  // namespace

Rational doubled_signed_area(const RationalTriangle& t) { return cross(t.v0, t.v1, t.v2); }

bool is_degenerate(const RationalTriangle& t) { return doubled_signed_area(t).sign() == 0; }

bool is_integral(const RationalTriangle& t) {
  for (const RationalPoint* p : {&t.v0, &t.v1, &t.v2}) {
    if (!p->x.is_integer() || !p->y.is_integer()) return false;
  }
  return true;
}

bool contains(const RationalTriangle& t, const RationalPoint& p) {
  const int orient = doubled_signed_area(t).sign();
  if (orient != 0) {
    const int s0 = cross(t.v0, t.v1, p).sign();
    const int s1 = cross(t.v1, t.v2, p).sign();
    const int s2 = cross(t.v2, t.v0, p).sign();
    return s0 * orient >= 0 && s1 * orient >= 0 && s2 * orient >= 0;
  }
  // Degenerate: p must be collinear and inside the bounding box of the span.
  const std::array<const RationalPoint*, 3> vs{&t.v0, &t.v1, &t.v2};
  for (const auto* a : vs) {
    for (const auto* b : vs) {
      if (cross(*a, *b, p).sign() != 0) return false;
    }
  }
  auto [xmin, xmax] = std::minmax({t.v0.x, t.v1.x, t.v2.x});
  auto [ymin, ymax] = std::minmax({t.v0.y, t.v1.y, t.v2.y});
  return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
}

std::int64_t count_points_rowscan(const RationalTriangle& t) {
  const std::array<RationalPoint, 3> v{t.v0, t.v1, t.v2};
  const auto [ymin, ymax] = std::minmax({v[0].y, v[1].y, v[2].y});
  const std::int64_t row_lo = to_int64(ceil(ymin));
  const std::int64_t row_hi = to_int64(floor(ymax));
  if (row_hi < row_lo) return 0;
  if (row_hi - row_lo + 1 > kRowscanWarnRows) {
    std::cerr << "warning: row scan over " << (row_hi - row_lo + 1) << " rows for " << t << '\n';
  }

  std::vector<EdgeLine> sloped;
  std::vector<std::array<Rational, 3>> flat;  // {y, x_a, x_b}
  for (int i = 0; i < 3; ++i) {
    const RationalPoint& a = v[i];
    const RationalPoint& b = v[(i + 1) % 3];
    if (a.y == b.y) {
      flat.push_back({a.y, a.x, b.x});
    } else {
      Rational slope = (b.x - a.x) / (b.y - a.y);
      Rational intercept = a.x - slope * a.y;
      auto [lo, hi] = std::minmax(a.y, b.y);
      sloped.push_back({std::move(slope), std::move(intercept), lo, hi});
    }
  }

  std::vector<FastEdge> fast;
  for (const EdgeLine& e : sloped) {
    auto f = make_fast(e);
    if (!f) {
      fast.clear();
      break;
    }
    fast.push_back(*f);
  }
  const bool use_fast = fast.size() == sloped.size() && row_lo > -kFastLimit && row_hi < kFastLimit;

  std::int64_t total = 0;
  if (use_fast) {
    for (std::int64_t row = row_lo; row <= row_hi; ++row) {
      // floor(max x) = max floor(x) and ceil(min x) = min ceil(x), so each
      // crossing contributes its own floor and ceiling.
      std::optional<std::int64_t> left, right;
      auto take = [&](std::int64_t lo_int, std::int64_t hi_int) {
        if (!left || lo_int < *left) left = lo_int;
        if (!right || hi_int > *right) right = hi_int;
      };
      for (const FastEdge& e : fast) {
        if (row < e.row_lo || row > e.row_hi) continue;
        const __int128 num = static_cast<__int128>(e.p) + static_cast<__int128>(e.q) * row;
        take(ceil_div(num, e.r), floor_div(num, e.r));
      }
      for (const auto& f : flat) {
        if (f[0] != Rational(row)) continue;
        for (const Rational* x : {&f[1], &f[2]}) take(to_int64(ceil(*x)), to_int64(floor(*x)));
      }
      if (left && *right >= *left) total += *right - *left + 1;
    }
    return total;
  }

  for (std::int64_t row = row_lo; row <= row_hi; ++row) {
    std::optional<Integer> left, right;
    auto take = [&](Integer lo_int, Integer hi_int) {
      if (!left || lo_int < *left) left = std::move(lo_int);
      if (!right || hi_int > *right) right = std::move(hi_int);
    };
    const Rational y(row);
    for (const EdgeLine& e : sloped) {
      if (y < e.y_lo || y > e.y_hi) continue;
      const Rational x = e.intercept + e.slope * y;
      take(ceil(x), floor(x));
    }
    for (const auto& f : flat) {
      if (f[0] != y) continue;
      for (const Rational* x : {&f[1], &f[2]}) take(ceil(*x), floor(*x));
    }
    if (left && *right >= *left) total += to_int64(Integer(*right - *left + 1));
  }
  return total;
}

std::int64_t count_points_pick(const RationalTriangle& t) {
  if (!is_integral(t)) throw PreconditionError("Pick count needs integral vertices");
  const Rational twice_area = doubled_signed_area(t);
  if (twice_area.sign() == 0) throw PreconditionError("Pick count needs a non-degenerate triangle");

  Integer boundary = 0;
  const std::array<const RationalPoint*, 3> v{&t.v0, &t.v1, &t.v2};
  for (int i = 0; i < 3; ++i) {
    const Integer dx = abs(v[(i + 1) % 3]->x.numerator() - v[i]->x.numerator());
    const Integer dy = abs(v[(i + 1) % 3]->y.numerator() - v[i]->y.numerator());
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    boundary += g;
  }
  // 2A + B is even for a lattice triangle; count = (2A + B + 2) / 2.
  const Integer doubled = abs(twice_area.numerator()) + boundary + 2;
  return to_int64(Integer(doubled / 2));
}

}  // namespace effcone
