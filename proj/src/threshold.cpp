#include "effcone/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "effcone/parallel.hpp"

namespace effcone {

std::int64_t nu_from_h0(std::int64_t h) {
  if (h < 1) throw PreconditionError("nu needs h0 >= 1, got " + std::to_string(h));
  // h > d(d+1)/2  <=>  d < (sqrt(8h-7) - 1)/2 roughly; start near it and fix up.
  auto d = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(h)) - 1.0) / 2.0);
  d = std::max<std::int64_t>(d, 0);
  while (d > 0 && h <= tri(d)) --d;
  while (h > tri(d + 1)) ++d;
  return d;
}

std::int64_t nu(const WeightedSurface& s, const DivisorSpec& d) { return nu_from_h0(h0(s, d)); }

std::string_view to_string(Branch br) {
  switch (br) {
    case Branch::prime_minus: return "I'-";
    case Branch::prime_plus: return "I'+";
    case Branch::double_prime_minus: return "I''-";
    case Branch::double_prime_plus: return "I''+";
  }
  return "?";
}

Rational interval_top(std::int64_t k) { return Rational(16 * k * k, 8 * k * k - 4 * k - 1); }

std::vector<Rational> sub_interval_endpoints(std::int64_t k) {
  if (k < 1) throw PreconditionError("k must be positive");
  return {interval_top(k + 1), Rational(2 * k + 1, k),
          Rational(4 * (2 * k + 1) * (2 * k + 1), 8 * k * k + 4 * k - 1), Rational(4 * k, 2 * k - 1),
          interval_top(k)};
}

std::vector<Classification> classify(std::int64_t b, std::int64_t p) {
  if (b < 1 || p >= 0) throw PreconditionError("classify needs b >= 1 and p < 0");
  const Rational x(b, -p);
  if (!(Rational(2) < x && x < Rational(16, 3))) {
    throw PreconditionError("b/(-p) = " + x.str() + " is outside (2, 16/3)");
  }
  const std::int64_t c = 4 * p + 3 * b;

  std::int64_t k = 1;
  while (x < interval_top(k + 1)) ++k;
  std::vector<std::int64_t> ks{k};
  if (x == interval_top(k + 1)) ks.push_back(k + 1);

  std::vector<Classification> out;
  for (std::int64_t kk : ks) {
    const auto ends = sub_interval_endpoints(kk);
    const Classification shapes[4] = {
        {kk, Branch::prime_minus, 2 * kk + 3, Family::B, 4 * (kk + 1), {}},
        {kk, Branch::prime_plus, 2 * kk + 1, Family::C, 4 * (kk + 1), {}},
        {kk, Branch::double_prime_minus, kk + 1, Family::B, 2 * kk + 1, {}},
        {kk, Branch::double_prime_plus, kk, Family::C, 2 * kk + 1, {}},
    };
    for (int i = 0; i < 4; ++i) {
      if (ends[i] <= x && x <= ends[i + 1]) {
        Classification cl = shapes[i];
        cl.gamma_pred = Rational(cl.nu0 * (cl.family == Family::B ? c : b), cl.m0);
        out.push_back(cl);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Classification& l, const Classification& r) {
    return std::pair(l.k, static_cast<int>(l.branch)) < std::pair(r.k, static_cast<int>(r.branch));
  });
  return out;
}

std::vector<Family> search_families(const WeightedSurface& s) {
  if (s.a() == 4 && s.q() == 3) return {Family::B, Family::C};
  if (s.a() <= 3) return {Family::AZ};
  throw PreconditionError(s.label() + ": no divisor families for the expected-threshold search");
}

Rational candidate_value(const WeightedSurface& s, Family f, std::int64_t n, std::int64_t nu_value) {
  const std::int64_t scale = f == Family::B ? s.c() : s.b();
  return Rational(scale * nu_value, n);
}

GammaSearch gamma_search(const WeightedSurface& s, std::int64_t n_max, unsigned jobs) {
  if (n_max < 1) throw PreconditionError("gamma_search needs N >= 1");
  const auto families = search_families(s);
  GammaSearch out;
  out.table.resize(families.size() * static_cast<std::size_t>(n_max));
  parallel_for(out.table.size(), jobs, [&](std::size_t i) {
    GammaEntry& e = out.table[i];
    e.family = families[i / static_cast<std::size_t>(n_max)];
    e.n = static_cast<std::int64_t>(i % static_cast<std::size_t>(n_max)) + 1;
    e.h0 = h0(s, {e.family, e.n});
    e.nu = nu_from_h0(e.h0);
    e.value = candidate_value(s, e.family, e.n, e.nu);
  });
  out.best = out.table.front().value;
  for (const auto& e : out.table) out.best = std::max(out.best, e.value);
  for (const auto& e : out.table) {
    if (e.value == out.best) out.witnesses.push_back(e);
  }
  return out;
}

namespace {

void require_bc_family(const WeightedSurface& s, Family f, std::int64_t n_max) {
  if (f == Family::AZ) throw PreconditionError("restricted suprema use family B or C");
  if (s.a() != 4 || s.q() != 3) throw PreconditionError(s.label() + ": needs a = 4 and q = 3");
  if (n_max < 1) throw PreconditionError("N must be positive");
}

}  // namespace

Rational restricted_gamma(const WeightedSurface& s, Family f, std::int64_t n_max) {
  require_bc_family(s, f, n_max);
  Rational best;
  for (std::int64_t n = 1; n <= n_max; ++n) best = std::max(best, candidate_value(s, f, n, nu(s, {f, n})));
  return best;
}

Rational restricted_nu_rate(const WeightedSurface& s, Family f, std::int64_t n_max) {
  require_bc_family(s, f, n_max);
  Rational best;
  for (std::int64_t n = 1; n <= n_max; ++n) best = std::max(best, Rational(nu(s, {f, n}), n));
  return best;
}

namespace {

bool small_a_applies(const WeightedSurface& s, bool& p_nonneg) {
  p_nonneg = s.p() >= 0;
  if (p_nonneg) return true;
  return s.q() == s.a() - 1 && Rational(-s.p() * s.a(), s.b()) <= Rational(1);
}

}  // namespace

std::int64_t small_a_nu_bound(const WeightedSurface& s) {
  bool p_nonneg = false;
  if (!small_a_applies(s, p_nonneg)) {
    throw PreconditionError(s.label() + ": needs p >= 0, or p < 0 with q = a-1 and -pa/b <= 1");
  }
  return p_nonneg ? s.q() + 1 : s.a() - 1;
}

Rational lower_bound_small_a(const WeightedSurface& s) {
  return Rational(small_a_nu_bound(s) * s.b());
}

RationalTriangle reference_triangle(std::int64_t k, ReferenceShape which) {
  if (k < 1) throw PreconditionError("reference triangles need k >= 1");
  const RationalPoint origin{0, 0};
  if (which == ReferenceShape::prime) {
    return {origin, {-(2 * k + 3), 0}, {-3 * (2 * k + 1), 4 * (2 * k + 1)}};
  }
  return {origin, {-(k + 1), 0}, {-3 * k, 4 * k}};
}

}  // namespace effcone
