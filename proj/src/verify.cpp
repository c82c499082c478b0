#include "effcone/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "effcone/parallel.hpp"

namespace effcone {

namespace {

std::int64_t delta_of(const WeightedSurface& s, Family f) {
  if (f == Family::B) return s.b();
  if (f == Family::C) return s.c();
  throw PreconditionError("margin checks use family B or C");
}

void require_margin_surface(const WeightedSurface& s) {
  if (s.a() != 4 || s.p() >= 0) throw PreconditionError(s.label() + ": margins need a = 4, p < 0");
}

std::int64_t multiple_rhs(const Classification& cls, std::int64_t t) { return tri(cls.nu0 * t + 1); }

std::int64_t non_multiple_rhs(const WeightedSurface& s, const Classification& cls,
                              Family family_prime, std::int64_t n) {
  const Rational x = Rational(delta_of(s, family_prime), delta_of(s, cls.family)) *
                     Rational(cls.nu0, cls.m0) * Rational(n);
  return tri(to_int64(ceil(x))) + 1;
}

}  // namespace

std::optional<std::int64_t> multiple_index(const WeightedSurface& s, const Classification& cls,
                                           Family family_prime, std::int64_t n) {
  const Integer num = Integer(static_cast<long>(n)) * delta_of(s, family_prime);
  const Integer den = Integer(static_cast<long>(cls.m0)) * delta_of(s, cls.family);
  if (num % den != 0) return std::nullopt;
  return to_int64(Integer(num / den));
}

std::int64_t non_multiple_margin(const WeightedSurface& s, const Classification& cls,
                                 Family family_prime, std::int64_t n) {
  require_margin_surface(s);
  if (n < 1) throw PreconditionError("n must be positive");
  if (multiple_index(s, cls, family_prime, n)) {
    throw PreconditionError("cell (" + std::string(to_string(family_prime)) + ", " +
                            std::to_string(n) + ") is a multiple of D0; use multiple_margin");
  }
  return non_multiple_rhs(s, cls, family_prime, n) - h0(s, {family_prime, n});
}

std::int64_t multiple_margin(const WeightedSurface& s, const Classification& cls, std::int64_t t) {
  require_margin_surface(s);
  if (t < 1) throw PreconditionError("t must be positive");
  return multiple_rhs(cls, t) - h0(s, {cls.family, cls.m0 * t});
}

namespace {

// h0 for families B, C at n = 1..n_max: index (family == C) * n_max + n - 1.
struct CountTable {
  std::int64_t n_max;
  std::vector<std::int64_t> h;
  std::int64_t at(Family f, std::int64_t n) const {
    return h[static_cast<std::size_t>((f == Family::C ? n_max : 0) + n - 1)];
  }
};

MarginReport build_report(const WeightedSurface& s, const CountTable& counts) {
  MarginReport r{s, classify(s.b(), s.p()), {}, 0, {}, true, {}, {}, false, false};
  const std::int64_t n_max = counts.n_max;
  for (std::size_t ci = 0; ci < r.classifications.size(); ++ci) {
    const Classification& cls = r.classifications[ci];
    for (Family f : {Family::B, Family::C}) {
      for (std::int64_t n = 1; n <= n_max; ++n) {
        MarginRow row;
        row.classification = ci;
        row.family = f;
        row.n = n;
        row.h0 = counts.at(f, n);
        if (auto t = multiple_index(s, cls, f, n)) {
          row.kind = CheckKind::multiple;
          row.t = *t;
          row.rhs = multiple_rhs(cls, *t);
        } else {
          row.rhs = non_multiple_rhs(s, cls, f, n);
        }
        row.margin = row.rhs - row.h0;
        if (row.margin < 1) r.failures.push_back(row);
        r.rows.push_back(row);
      }
    }
  }
  if (!r.rows.empty()) {
    r.min_margin = std::min_element(r.rows.begin(), r.rows.end(), [](auto& x, auto& y) {
                     return x.margin < y.margin;
                   })->margin;
  }
  const std::size_t per_cls = static_cast<std::size_t>(2 * n_max);
  for (std::size_t ci = 1; ci < r.classifications.size(); ++ci) {
    for (std::size_t j = 0; j < per_cls; ++j) {
      if ((r.rows[j].margin >= 1) != (r.rows[ci * per_cls + j].margin >= 1)) r.coherent = false;
    }
  }

  Rational best;
  for (Family f : {Family::B, Family::C}) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      best = std::max(best, candidate_value(s, f, n, nu_from_h0(counts.at(f, n))));
    }
  }
  r.gamma_best = best;
  r.gamma_pred = r.classifications.front().gamma_pred;
  r.gamma_match = std::all_of(r.classifications.begin(), r.classifications.end(),
                              [&](const Classification& c) { return c.gamma_pred == best; });
  r.gamma_resolved = std::all_of(r.classifications.begin(), r.classifications.end(),
                                 [&](const Classification& c) { return c.m0 <= n_max; });
  r.witness_at_m0 = std::all_of(
      r.classifications.begin(), r.classifications.end(), [&](const Classification& c) {
        return c.m0 <= n_max &&
               candidate_value(s, c.family, c.m0, nu_from_h0(counts.at(c.family, c.m0))) == best;
      });
  return r;
}

}  // namespace

MarginReport check_surface(const WeightedSurface& s, std::int64_t n_max, unsigned jobs) {
  return std::move(sweep({s}, n_max, jobs).reports.front());
}

SweepResult sweep(const std::vector<WeightedSurface>& surfaces, std::int64_t n_max, unsigned jobs) {
  if (n_max < 1) throw PreconditionError("n_max must be positive");
  for (const auto& s : surfaces) {
    require_margin_surface(s);
    classify(s.b(), s.p());
  }
  const std::size_t per_surface = static_cast<std::size_t>(2 * n_max);
  std::vector<std::int64_t> h(surfaces.size() * per_surface);
  parallel_for(h.size(), jobs, [&](std::size_t i) {
    const WeightedSurface& s = surfaces[i / per_surface];
    const std::size_t j = i % per_surface;
    const Family f = j < static_cast<std::size_t>(n_max) ? Family::B : Family::C;
    const std::int64_t n = static_cast<std::int64_t>(j % static_cast<std::size_t>(n_max)) + 1;
    h[i] = h0(s, {f, n});
  });

  SweepResult out;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    CountTable table{n_max, std::vector<std::int64_t>(h.begin() + i * per_surface,
                                                      h.begin() + (i + 1) * per_surface)};
    out.reports.push_back(build_report(surfaces[i], table));
  }
  if (out.reports.empty()) return out;

  out.min_margin = out.reports.front().min_margin;
  std::map<std::int64_t, bool> pass_by_b;
  for (const auto& r : out.reports) {
    out.min_margin = std::min(out.min_margin, r.min_margin);
    if (!r.passed()) ++out.failing_surfaces;
    auto [it, fresh] = pass_by_b.emplace(r.surface.b(), r.passed());
    if (!fresh) it->second = it->second && r.passed();
  }
  for (auto it = pass_by_b.rbegin(); it != pass_by_b.rend() && it->second; ++it) {
    out.passing_from_b = it->first;
  }
  return out;
}

std::optional<ChainLink> next_link(std::int64_t alpha0, std::int64_t beta0, int sigma) {
  if (sigma != 1 && sigma != -1) throw PreconditionError("sigma must be +1 or -1");
  if (alpha0 < 1 || beta0 < 2 || std::gcd(alpha0, beta0) != 1) {
    throw PreconditionError("next_link needs coprime alpha0 >= 1, beta0 >= 2");
  }
  // β1·α0 ≡ -σ (mod β0)
  const std::int64_t beta1 = mod_floor(-sigma * mod_inverse(alpha0, beta0), beta0);
  if (beta1 < 1) return std::nullopt;
  const std::int64_t alpha1 = (sigma + beta1 * alpha0) / beta0;
  if (alpha1 < 1) return std::nullopt;
  return ChainLink{alpha1, beta1, sigma};
}

DeltaCalibration calibrate_delta(std::int64_t beta_max) {
  if (beta_max < 3) throw PreconditionError("calibrate_delta needs beta_max >= 3");
  DeltaCalibration out;
  out.beta_max = beta_max;
  for (std::int64_t beta0 = 2; beta0 <= beta_max; ++beta0) {
    for (std::int64_t alpha0 = 1; alpha0 < beta0; ++alpha0) {
      if (std::gcd(alpha0, beta0) != 1) continue;
      for (int sigma : {1, -1}) {
        const auto link = next_link(alpha0, beta0, sigma);
        if (!link) continue;
        for (std::int64_t u0 = 0; u0 < beta0; ++u0) {
          const ReductionStep step = reduce_step(alpha0, beta0, *link, u0);
          ++out.instances;
          ++out.counts[sigma == 1][step.delta_literal][step.delta_calibrated];
          if (step.delta_literal != step.delta_calibrated) {
            out.disagreements.push_back({alpha0, beta0, link->alpha, link->beta, sigma, u0, step.t,
                                         step.u, step.delta_literal, step.delta_calibrated});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace effcone
