#include <doctest.h>

#include <numeric>

#include "effcone/fracsum.hpp"

using namespace effcone;

namespace {

// Σ_{j=0}^{u} {αj/β} straight from the definition.
Rational naive_frac_sum(std::int64_t alpha, std::int64_t beta, std::int64_t u) {
  Rational total;
  for (std::int64_t j = 0; j <= u; ++j) total += frac(Rational(alpha * j, beta));
  return total;
}

// β1 with β1·α0 ≡ -σ (mod β0), and the matching α1.
bool complete(std::int64_t alpha0, std::int64_t beta0, int sigma, ChainLink& out) {
  const std::int64_t beta1 = mod_floor(-sigma * mod_inverse(alpha0, beta0), beta0);
  if (beta1 < 1) return false;
  const std::int64_t alpha1 = (sigma + beta1 * alpha0) / beta0;
  if (alpha1 < 1) return false;
  out = {alpha1, beta1, sigma};
  return true;
}

}  // namespace

TEST_CASE("F examples") {
  CHECK(centered_sum(2, 0, 1) == Rational(1, 4));
  CHECK(centered_sum(5, 1, 2) == Rational(2, 5));
  CHECK(centered_sum(5, 3, 3) == Rational(0));
  CHECK_THROWS_AS(centered_sum(6, 1, 4), PreconditionError);
  CHECK_THROWS_AS(centered_sum(5, 5, 2), PreconditionError);
}

TEST_CASE("frac_sum matches the definition") {
  for (std::int64_t beta = 1; beta <= 30; ++beta) {
    for (std::int64_t alpha = -31; alpha <= 31; ++alpha) {
      for (std::int64_t u = 0; u <= 2 * beta; ++u) CHECK(frac_sum(alpha, beta, u) == naive_frac_sum(alpha, beta, u));
    }
  }
}

TEST_CASE("floor_sum examples and closed forms") {
  CHECK(floor_sum(3, 5) == 4);
  CHECK(floor_sum(1, 9) == 0);
  CHECK(floor_sum(7, 4) == 9);
  CHECK_THROWS_AS(floor_sum(4, 6), PreconditionError);
  for (std::int64_t beta = 1; beta <= 200; ++beta) {
    for (std::int64_t alpha = 1; alpha <= 2 * beta + 1; ++alpha) {
      if (std::gcd(alpha, beta) != 1) continue;
      std::int64_t fl = 0, ce = 0;
      for (std::int64_t k = 0; k < beta; ++k) {
        fl += alpha * k / beta;
        ce += (alpha * k + beta - 1) / beta;
      }
      CHECK(floor_sum(alpha, beta) == fl);
      CHECK(ceil_sum(alpha, beta) == ce);
    }
  }
}

TEST_CASE("full_sum examples") {
  CHECK(full_sum(3, 5, 2, -1) == Rational(4, 5));
  CHECK(full_sum(2, 5, 2, 1) == Rational(6, 5));
  // Σ_{j=0}^{4} {4j/5} = 2 by direct summation.
  CHECK(full_sum(4, 5, 4, -1) == Rational(2));
  CHECK(naive_frac_sum(4, 5, 4) == Rational(2));
  CHECK_THROWS_AS(full_sum(3, 5, 3, -1), PreconditionError);
}

TEST_CASE("fractional-part identities over beta0 <= 60") {
  for (std::int64_t beta0 = 2; beta0 <= 60; ++beta0) {
    for (std::int64_t alpha0 = 1; alpha0 < beta0; ++alpha0) {
      if (std::gcd(alpha0, beta0) != 1) continue;
      for (int sigma : {1, -1}) {
        ChainLink l{};
        if (!complete(alpha0, beta0, sigma, l)) continue;
        CHECK(full_sum(alpha0, beta0, l.beta, sigma) == naive_frac_sum(alpha0, beta0, l.beta));
        for (std::int64_t j = 0; j < l.beta; ++j) {
          CHECK(frac(Rational(alpha0 * j, beta0)) ==
                frac(Rational(l.alpha * j, l.beta)) - Rational(sigma * j, l.beta * beta0));
        }
        for (std::int64_t u = 0; u < l.beta; ++u) {
          CHECK(frac_sum(alpha0, beta0, u) ==
                frac_sum(l.alpha, l.beta, u) - Rational(sigma * tri(u), beta0 * l.beta));
        }
      }
    }
  }
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon(1, 0, 1, 5, 2) == Rational(2, 5));
  CHECK(epsilon(-1, 0, 1, 5, 2) == Rational(1, 5));
  for (std::int64_t bp = 3; bp <= 12; ++bp) {
    for (std::int64_t b = 2; b < bp; ++b) CHECK(epsilon(1, 0, 0, bp, b) == Rational(bp - b, 2 * bp * b));
  }
  CHECK_THROWS_AS(epsilon(1, 0, 2, 5, 2), PreconditionError);
  CHECK_THROWS_AS(epsilon(0, 0, 1, 5, 2), PreconditionError);
  CHECK_THROWS_AS(epsilon(1, -1, 1, 5, 2), PreconditionError);
}

TEST_CASE("literal delta differs from the identity for sigma = -1") {
  // (3,5) -> (1,2), σ = -1: u0 = 3 and u0 = 4 cross the literal threshold but
  // the identity needs Δ = 0.
  for (std::int64_t u0 : {3, 4}) {
    const ReductionStep st = reduce_step(3, 5, {1, 2, -1}, u0);
    CHECK(st.delta_literal == 1);
    CHECK(st.delta_calibrated == 0);
  }
  const ReductionStep st = reduce_step(3, 5, {1, 2, -1}, 4);
  CHECK(centered_sum(5, 4, 3) == Rational(0));
  CHECK(st.eps_without_delta == Rational(-1, 4));
}

TEST_CASE("reduce_chain examples") {
  const ReductionChain one(3, 5, {{1, 2, -1}});
  const auto r = reduce_chain(one, 1);
  CHECK(r.steps.size() == 1);
  CHECK(r.steps[0].u == 1);
  CHECK(r.steps[0].t == 0);
  CHECK(r.total == Rational(1, 5));
  CHECK(r.total == r.direct);

  const ReductionChain two(2, 5, {{1, 2, 1}});
  const auto s = reduce_chain(two, 0);
  CHECK(s.steps[0].eps == Rational(3, 20));
  CHECK(s.terminal == Rational(1, 4));
  CHECK(s.total == Rational(2, 5));
}

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(ReductionChain(3, 5, {{1, 2, 1}}), PreconditionError);
  CHECK_THROWS_AS(ReductionChain(3, 5, {{2, 5, -1}}), PreconditionError);
  CHECK_THROWS_AS(ReductionChain(4, 6, {}), PreconditionError);
  CHECK_THROWS_AS(reduce_chain(ReductionChain(3, 5, {{1, 2, -1}}), 5), PreconditionError);
  // A terminal (1, 2) may follow α = 1.
  CHECK_NOTHROW(ReductionChain(1, 3, {{1, 2, 1}}));
  CHECK_THROWS_AS(ReductionChain(1, 4, {{1, 3, 1}, {1, 2, 1}}), PreconditionError);
}

TEST_CASE("reduction identity holds for every configuration with beta0 <= 60") {
  std::int64_t instances = 0;
  for (std::int64_t beta0 = 2; beta0 <= 60; ++beta0) {
    for (std::int64_t alpha0 = 1; alpha0 < beta0; ++alpha0) {
      if (std::gcd(alpha0, beta0) != 1) continue;
      for (int sigma : {1, -1}) {
        ChainLink l{};
        if (!complete(alpha0, beta0, sigma, l)) continue;
        for (std::int64_t u0 = 0; u0 < beta0; ++u0) {
          const ReductionStep st = reduce_step(alpha0, beta0, l, u0);
          CHECK(centered_sum(beta0, u0, alpha0) == centered_sum(l.beta, st.u, l.alpha) + st.eps);
          CHECK((st.delta_calibrated == 0 || st.delta_calibrated == 1));
          ++instances;
        }
      }
    }
  }
  CHECK(instances == 86631);
}

TEST_CASE("three-step chains telescope") {
  int chains = 0;
  for (std::int64_t beta0 = 5; beta0 <= 60; ++beta0) {
    for (std::int64_t alpha0 = 1; alpha0 < beta0; ++alpha0) {
      if (std::gcd(alpha0, beta0) != 1) continue;
      for (int s1 : {1, -1}) {
        ChainLink l1{}, l2{}, l3{};
        if (!complete(alpha0, beta0, s1, l1) || l1.beta < 2 || l1.alpha >= alpha0) continue;
        for (int s2 : {1, -1}) {
          if (!complete(l1.alpha, l1.beta, s2, l2) || l2.beta < 2 || l2.alpha >= l1.alpha) continue;
          for (int s3 : {1, -1}) {
            if (!complete(l2.alpha, l2.beta, s3, l3) || l3.alpha >= l2.alpha) continue;
            const ReductionChain chain(alpha0, beta0, {l1, l2, l3});
            for (std::int64_t u0 = 0; u0 < beta0; ++u0) {
              const auto r = reduce_chain(chain, u0);
              CHECK(r.total == r.direct);
              Rational sum = r.terminal;
              for (const auto& st : r.steps) sum += st.eps;
              CHECK(sum == r.direct);
            }
            ++chains;
          }
        }
      }
    }
  }
  CHECK(chains > 100);
}

TEST_CASE("epsilon_bounds examples") {
  const auto plus = epsilon_bounds(1, 5, 2);
  CHECK(plus.upper_small == Rational(2, 5));
  CHECK(plus.upper_large == Rational(2, 5));
  CHECK(plus.lower == Rational(-3, 10));
  CHECK(epsilon_bounds(-1, 5, 2).lower == Rational(3, 20));
  CHECK_THROWS_AS(epsilon_bounds(1, 2, 2), PreconditionError);
  CHECK_THROWS_AS(epsilon_bounds(1, 5, 1), PreconditionError);
}

TEST_CASE("sigma = +1 upper bound is attained at (t, u) = (0, 1) for (5, 2)") {
  Rational best = epsilon(1, 0, 0, 5, 2);
  for (std::int64_t u = 0; u < 2; ++u) {
    for (std::int64_t t = 0; t <= (5 - 1 - u) / 2; ++t) best = std::max(best, epsilon(1, t, u, 5, 2));
  }
  CHECK(best == Rational(2, 5));
  CHECK(best == epsilon(1, 0, 1, 5, 2));
}

TEST_CASE("stated sigma = -1 small-regime bound has a counterexample") {
  // v = 0 < β' - β = 1, ε = 1/12 but the bound is (1+3)(1-1)/48 = 0.
  CHECK(epsilon(-1, 0, 0, 3, 2) == Rational(1, 12));
  CHECK(epsilon_bounds(-1, 3, 2).upper_small == Rational(0));
}

TEST_CASE("epsilon bounds over the grid, other than the sigma = -1 small regime") {
  for (std::int64_t bp = 3; bp <= 40; ++bp) {
    for (std::int64_t b = 2; b < bp; ++b) {
      for (int sigma : {1, -1}) {
        const auto bounds = epsilon_bounds(sigma, bp, b);
        const std::int64_t g = bp - b;
        for (std::int64_t u = 0; u < b; ++u) {
          for (std::int64_t t = 0; t <= (bp - 1 - u) / b; ++t) {
            const Rational e = epsilon(sigma, t, u, bp, b);
            const std::int64_t v = u + b * t;
            CHECK(bounds.lower <= e);
            if (sigma == 1) CHECK(e <= bounds.upper_small);
            if (sigma == -1 && v >= g) CHECK(e <= bounds.upper_large);
            // The vertex value (g+1)²/(8ββ') bounds the small regime.
            if (sigma == -1 && v < g) CHECK(e <= Rational((g + 1) * (g + 1), 8 * b * bp));
          }
        }
      }
    }
  }
}

TEST_CASE("epsilon in v and its monotonicity") {
  for (std::int64_t bp = 3; bp <= 40; ++bp) {
    for (std::int64_t b = 2; b < bp; ++b) {
      for (int sigma : {1, -1}) {
        const Rational turn = epsilon_turning_point(sigma, bp, b);
        for (std::int64_t u = 0; u < b; ++u) {
          for (std::int64_t t = 0; t <= (bp - 1 - u) / b; ++t) {
            const std::int64_t v = u + b * t;
            const int delta = literal_delta(sigma, t, u, bp, b);
            CHECK(epsilon(sigma, t, u, bp, b) == epsilon_in_v(sigma, v, u, bp, b, delta));
          }
          for (std::int64_t v = u; v + 1 <= bp - 1; ++v) {
            const Rational now = epsilon_in_v(sigma, v, u, bp, b, 0);
            const Rational next = epsilon_in_v(sigma, v + 1, u, bp, b, 0);
            if (Rational(v + 1) <= turn) CHECK((sigma == -1 ? now < next : now > next));
            if (Rational(v) >= turn) CHECK((sigma == -1 ? now > next : now < next));
          }
        }
      }
    }
  }
}

TEST_CASE("standard chains") {
  const auto e1 = standard_chain(1, 2, false);
  const std::vector<ChainLink> want1 = {{23, 64, 1}, {9, 25, 1}, {5, 14, -1}, {1, 3, -1}, {1, 2, 1}};
  CHECK(e1 == want1);
  const std::vector<ChainLink> want4 = {{3, 7, 1}, {1, 2, 1}};
  CHECK(standard_chain(4, 3, false) == want4);
  const std::vector<ChainLink> k2 = {{2, 5, 1}, {1, 2, 1}};
  CHECK(standard_chain(4, 2, false) == k2);
  CHECK(standard_chain(4, 2, true).front().sigma == -1);
  CHECK_THROWS_AS(standard_chain(3, 1, false), PreconditionError);
  CHECK_THROWS_AS(standard_chain(1, 1, false), PreconditionError);
  CHECK_THROWS_AS(standard_chain(5, 2, false), PreconditionError);
  for (std::int64_t k = 2; k <= 30; ++k) {
    for (int entry = 1; entry <= 4; ++entry) CHECK_NOTHROW(standard_chain(entry, k, entry % 2 == 0));
  }
}
