#include "effcone/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "effcone/threshold.hpp"

namespace effcone {

namespace {

void require_request(const FamilyRequest& req) {
  if (req.alpha < 1 || req.beta < 1) throw PreconditionError("family needs positive alpha, beta");
  if (std::gcd(req.alpha, req.beta) != 1) {
    throw PreconditionError("family needs coprime alpha, beta, got (" + std::to_string(req.alpha) +
                            ", " + std::to_string(req.beta) + ")");
  }
  if (req.tau != 1 && req.tau != -1) throw PreconditionError("tau must be +1 or -1");
  if (req.count < 1) throw PreconditionError("count must be positive");
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return num / den + ((num % den != 0 && (num > 0) == (den > 0)) ? 1 : 0);
}

}  // namespace

std::vector<WeightedSurface> scan_family(const FamilyRequest& req) {
  require_request(req);
  // α·b - β·P = τ with P = -p: b = b0 + β·t, P = P0 + α·t.
  const Bezout e = egcd(req.alpha, req.beta);
  if (e.g != 1) throw std::logic_error("egcd of coprime inputs is not 1");
  const std::int64_t b0 = req.tau * e.s;
  const std::int64_t p0 = -req.tau * e.t;
  // Smallest t with b >= 1 and P >= 1.
  const std::int64_t t0 = std::max(ceil_div(1 - b0, req.beta), ceil_div(1 - p0, req.alpha));

  std::vector<WeightedSurface> out;
  for (std::int64_t step = 0; step < kFamilyScanLimit; ++step) {
    const std::int64_t t = t0 + step;
    const std::int64_t b = b0 + req.beta * t;
    const std::int64_t big_p = p0 + req.alpha * t;
    if (req.b_max && b > *req.b_max) break;
    const std::int64_t c = 3 * b - 4 * big_p;
    if (b <= 4 || c <= b) continue;
    if (std::gcd(b, std::int64_t{4}) != 1 || std::gcd(c, std::int64_t{4}) != 1 || std::gcd(b, c) != 1) {
      continue;
    }
    if (req.interval_filter && !req.interval_filter->contains(Rational(b, big_p))) continue;
    out.push_back(make_surface(4, b, c));
    if (static_cast<std::int64_t>(out.size()) == req.count) break;
  }
  return out;
}

std::vector<WeightedSurface> solve_family(const FamilyRequest& req) {
  auto out = scan_family(req);
  if (static_cast<std::int64_t>(out.size()) < req.count) {
    throw PreconditionError("family (alpha=" + std::to_string(req.alpha) + ", beta=" +
                            std::to_string(req.beta) + ", tau=" + std::to_string(req.tau) +
                            ") produced " + std::to_string(out.size()) + " of " +
                            std::to_string(req.count) + " surfaces within the scan bound");
  }
  return out;
}

std::vector<PoolMember> theorem_pool(std::int64_t k_max, std::int64_t b_max, std::int64_t per_side) {
  std::vector<PoolMember> out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const auto ends = sub_interval_endpoints(k);
    for (int i = 0; i < 4; ++i) {
      const ClosedInterval range{ends[i], ends[i + 1]};
      // Approach the lower end from above and the upper end from below.
      for (const auto& [end, tau] : {std::pair{ends[i], 1}, std::pair{ends[i + 1], -1}}) {
        FamilyRequest req;
        req.alpha = to_int64(end.denominator());
        req.beta = to_int64(end.numerator());
        req.tau = tau;
        req.count = per_side;
        req.interval_filter = range;
        req.b_max = b_max;
        for (auto& s : scan_family(req)) {
          const bool seen = std::any_of(out.begin(), out.end(),
                                        [&](const PoolMember& m) { return m.surface == s; });
          if (!seen) out.push_back({s, k, i, end, tau});
        }
      }
    }
  }
  return out;
}

}  // namespace effcone
