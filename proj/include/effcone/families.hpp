#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "effcone/numerics.hpp"
#include "effcone/surface.hpp"

namespace effcone {

struct ClosedInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Surfaces P(4, b, c) with α·b - β·(-p) = τ and c = 4p + 3b, for coprime α, β.
// Their ratios b/(-p) approach β/α from above (τ = +1) or below (τ = -1).
struct FamilyRequest {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  int tau = 1;
  std::int64_t count = 1;
  std::optional<ClosedInterval> interval_filter;
  std::optional<std::int64_t> b_max;  // stop scanning past this b
};

// Maximum number of parameter steps scanned before giving up.
inline constexpr std::int64_t kFamilyScanLimit = 1'000'000;

// Up to `count` surfaces in increasing b (b > 4, c > b, {4, b, c} pairwise
// coprime, inside the filter). May return fewer.
std::vector<WeightedSurface> scan_family(const FamilyRequest& req);

// As scan_family, but fewer than `count` surfaces is a PreconditionError.
std::vector<WeightedSurface> solve_family(const FamilyRequest& req);

// Where a pool surface came from.
struct PoolMember {
  WeightedSurface surface;
  std::int64_t k;
  int sub_interval;  // 0..3, in increasing x
  Rational endpoint;
  int tau;
};

// For each k <= k_max and each of the four sub-intervals of I_k, up to
// per_side surfaces with b <= b_max approaching each endpoint from inside.
// Duplicates are dropped; order is deterministic.
std::vector<PoolMember> theorem_pool(std::int64_t k_max, std::int64_t b_max, std::int64_t per_side);

}  // namespace effcone
