#include <doctest.h>

#include "effcone/families.hpp"
#include "effcone/verify.hpp"

using namespace effcone;

namespace {

Classification pick(const WeightedSurface& s, Branch br) {
  for (const auto& c : classify(s.b(), s.p())) {
    if (c.branch == br) return c;
  }
  FAIL("branch not found");
  return {};
}

}  // namespace

TEST_CASE("non-multiple margin examples") {
  const auto s = make_surface(4, 5, 7);
  const auto cls = pick(s, Branch::prime_minus);
  CHECK(cls.k == 2);
  CHECK(non_multiple_margin(s, cls, Family::B, 1) == 1);
  CHECK(non_multiple_margin(s, cls, Family::B, 2) == 2);
  CHECK(h0(s, {Family::B, 2}) == 9);
  const auto t = make_surface(4, 13, 23);
  CHECK(non_multiple_margin(t, pick(t, Branch::prime_plus), Family::C, 1) == 1);
}

TEST_CASE("multiple margin examples") {
  const auto s = make_surface(4, 5, 7);
  CHECK(multiple_margin(s, pick(s, Branch::prime_minus), 1) == 12);
  const auto u = make_surface(4, 7, 9);
  const auto ucls = pick(u, Branch::prime_minus);
  CHECK(ucls.k == 3);
  CHECK(ucls.m0 == 9);
  CHECK(multiple_margin(u, ucls, 1) == 16);
  const auto t = make_surface(4, 13, 23);
  CHECK(multiple_margin(t, pick(t, Branch::prime_plus), 1) == 8);
}

TEST_CASE("routing by divisibility") {
  const auto s = make_surface(4, 5, 7);
  const auto cls = pick(s, Branch::prime_minus);  // D0 = 7bD_x
  CHECK(multiple_index(s, cls, Family::B, 14) == 2);
  CHECK(!multiple_index(s, cls, Family::B, 13));
  // 5cD_x = 35D_x = 7bD_x is D0 itself.
  CHECK(multiple_index(s, cls, Family::C, 5) == 1);
  CHECK(!multiple_index(s, cls, Family::C, 7));
  CHECK_THROWS_AS(non_multiple_margin(s, cls, Family::B, 7), PreconditionError);
  CHECK_THROWS_AS(non_multiple_margin(s, cls, Family::C, 10), PreconditionError);
}

TEST_CASE("cross-family multiples of D0 are checked against the multiple bound") {
  const auto s = make_surface(4, 5, 11);
  const auto cls = classify(s.b(), s.p());
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].family == Family::C);
  CHECK(cls[0].m0 == 1);
  // 11bD_x = 5cD_x = 5D0.
  CHECK(multiple_index(s, cls[0], Family::B, 11) == 5);
  const auto r = check_surface(s, 30);
  CHECK(r.min_margin >= 1);
}

TEST_CASE("margins are rhs minus h0") {
  const auto r = check_surface(make_surface(4, 19, 33), 40);
  for (const auto& row : r.rows) {
    CHECK(row.margin == row.rhs - row.h0);
    CHECK(row.h0 == h0(r.surface, {row.family, row.n}));
  }
}

TEST_CASE("sweep examples") {
  const auto one = sweep({make_surface(4, 5, 7)}, 20);
  REQUIRE(one.reports.size() == 1);
  const auto& r = one.reports[0];
  CHECK(r.min_margin >= 1);
  CHECK(r.gamma_match);
  CHECK(r.gamma_best == Rational(12));
  CHECK(r.classifications.size() == 2);
  CHECK(r.coherent);
  CHECK(r.witness_at_m0);
  CHECK(r.rows.size() == 80);

  const auto fam = sweep(solve_family({1, 3, 1, 3, std::nullopt, std::nullopt}), 50);
  CHECK(fam.reports.size() == 3);
  CHECK(fam.min_margin >= 1);
  CHECK(fam.failing_surfaces == 0);
  CHECK(fam.passing_from_b == 7);

  const auto empty = sweep({}, 10);
  CHECK(empty.reports.empty());
  CHECK(!empty.passing_from_b);
}

TEST_CASE("sweep rejects surfaces outside the theorem") {
  CHECK_THROWS_AS(sweep({make_surface(4, 5, 9)}, 5), PreconditionError);
  CHECK_THROWS_AS(sweep({make_surface(4, 5, 7)}, 0), PreconditionError);
}

TEST_CASE("sweep results do not depend on the worker count") {
  std::vector<WeightedSurface> surfaces;
  for (const auto& m : theorem_pool(2, 120, 1)) surfaces.push_back(m.surface);
  const auto a = sweep(surfaces, 30, 1);
  const auto b = sweep(surfaces, 30, 3);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    REQUIRE(a.reports[i].rows.size() == b.reports[i].rows.size());
    for (std::size_t j = 0; j < a.reports[i].rows.size(); ++j) {
      CHECK(a.reports[i].rows[j].margin == b.reports[i].rows[j].margin);
    }
  }
}

TEST_CASE("next_link") {
  const auto l = next_link(3, 5, -1);
  REQUIRE(l);
  CHECK(*l == ChainLink{1, 2, -1});
  CHECK(next_link(2, 5, 1) == ChainLink{1, 2, 1});
  CHECK(!next_link(1, 5, -1));
}

TEST_CASE("delta calibration") {
  CHECK_THROWS_AS(calibrate_delta(2), PreconditionError);
  const auto c = calibrate_delta(60);
  CHECK(c.instances == 86631);
  std::int64_t true_one = 0;
  for (int s = 0; s < 2; ++s) {
    for (int lit = 0; lit < 2; ++lit) true_one += c.counts[s][lit][1];
  }
  CHECK(true_one == 0);
  CHECK(c.counts[1][1][0] == 0);
  CHECK(c.counts[0][1][0] == static_cast<std::int64_t>(c.disagreements.size()));
  CHECK(!c.disagreements.empty());

  auto has = [&](std::int64_t a0, std::int64_t b0, int sigma, std::int64_t u0) {
    for (const auto& d : c.disagreements) {
      if (d.alpha0 == a0 && d.beta0 == b0 && d.sigma == sigma && d.u0 == u0) return true;
    }
    return false;
  };
  CHECK(has(3, 5, -1, 4));
  CHECK(has(3, 5, -1, 3));
  CHECK(!has(3, 5, -1, 1));
  CHECK(!has(2, 5, 1, 1));
}
