#include <doctest.h>

#include <random>
#include <sstream>

#include "effcone/numerics.hpp"

using namespace effcone;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-69/13") == Rational(-69, 13));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() ==
        "41152263004115226300411522630");
  for (const char* bad : {"", "/", "1/", "/2", "x", "1.5", "1/0", "--3", "3/-"}) {
    CAPTURE(bad);
    CHECK_THROWS(Rational::parse(bad));
  }
}

TEST_CASE("frac examples") {
  CHECK(frac(Rational(20, 7)) == Rational(6, 7));
  CHECK(frac(Rational(-3, 4)) == Rational(1, 4));
  CHECK(frac(Rational(5)) == Rational(0));
}

TEST_CASE("floor and ceil round toward the correct side") {
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-4)) == -4);
  CHECK(ceil(Rational(-4)) == -4);
}

TEST_CASE("frac properties on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 997), shift(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(num(rng), den(rng));
    const std::int64_t n = shift(rng);
    const Rational f = frac(x);
    CHECK(f >= Rational(0));
    CHECK(f < Rational(1));
    CHECK((x - f).is_integer());
    CHECK(frac(x + Rational(n)) == f);
  }
}

TEST_CASE("egcd examples") {
  auto check = [](std::int64_t a, std::int64_t b, Bezout want) {
    const Bezout got = egcd(a, b);
    CHECK(got.g == want.g);
    CHECK(got.s == want.s);
    CHECK(got.t == want.t);
  };
  check(1, 3, {1, 1, 0});
  check(8, 5, {1, 2, -3});
  check(4, 6, {2, -1, 1});
  CHECK_THROWS_AS(egcd(0, 0), PreconditionError);
}

TEST_CASE("egcd satisfies Bezout on a grid") {
  for (std::int64_t a = -40; a <= 40; ++a) {
    for (std::int64_t b = -40; b <= 40; ++b) {
      if (a == 0 && b == 0) continue;
      const Bezout e = egcd(a, b);
      CHECK(e.g > 0);
      CHECK(e.s * a + e.t * b == e.g);
      CHECK(a % e.g == 0);
      CHECK(b % e.g == 0);
    }
  }
}

TEST_CASE("tri") {
  CHECK(tri(0) == 0);
  CHECK(tri(4) == 10);
  CHECK(tri(12) == 78);
  CHECK_THROWS_AS(tri(-1), PreconditionError);
}

TEST_CASE("mod_inverse and mod_floor") {
  CHECK(mod_inverse(5, 4) == 1);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_floor(-3, 4) == 1);
  CHECK_THROWS_AS(mod_inverse(2, 4), PreconditionError);
}

TEST_CASE("to_int64 range check") {
  CHECK(to_int64(Integer("9223372036854775807")) == INT64_MAX);
  CHECK_THROWS_AS(to_int64(Integer("9223372036854775808")), std::overflow_error);
}

TEST_CASE("ordering and printing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  std::ostringstream os;
  os << Rational(-5, 28);
  CHECK(os.str() == "-5/28");
}
