#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "effcone/lattice.hpp"
#include "effcone/numerics.hpp"
#include "effcone/surface.hpp"

namespace effcone {

// ν = max{d >= 1 : h > d(d+1)/2}, and 0 when no such d exists (h = 1).
std::int64_t nu_from_h0(std::int64_t h);
std::int64_t nu(const WeightedSurface& s, const DivisorSpec& d);

// The four closed sub-intervals of I_k, in increasing x = b/(-p):
//   I'_{k,-}  = [E(k+1), (2k+1)/k]
//   I'_{k,+}  = [(2k+1)/k, 4(2k+1)²/(8k²+4k-1)]
//   I''_{k,-} = [4(2k+1)²/(8k²+4k-1), 4k/(2k-1)]
//   I''_{k,+} = [4k/(2k-1), E(k)]
// where E(k) = 16k²/(8k²-4k-1).
enum class Branch { prime_minus, prime_plus, double_prime_minus, double_prime_plus };

std::string_view to_string(Branch br);

// The predicted optimal divisor D0 = m0·δ·D_x (δ = b for B, c for C) with
// ν(D0) = nu0, and gamma_pred = nu0·c/m0 (B) or nu0·b/m0 (C).
struct Classification {
  std::int64_t k = 0;
  Branch branch = Branch::prime_minus;
  std::int64_t m0 = 0;
  Family family = Family::B;
  std::int64_t nu0 = 0;
  Rational gamma_pred;

  DivisorSpec divisor() const { return {family, m0}; }
  friend bool operator==(const Classification&, const Classification&) = default;
};

Rational interval_top(std::int64_t k);  // E(k)

// One Classification per closed sub-interval containing b/(-p); two at a
// shared endpoint. Requires p < 0 and 2 < b/(-p) < 16/3.
std::vector<Classification> classify(std::int64_t b, std::int64_t p);

// Endpoints E(k+1) < (2k+1)/k < 4(2k+1)²/(8k²+4k-1) < 4k/(2k-1) < E(k),
// as exact fractions.
std::vector<Rational> sub_interval_endpoints(std::int64_t k);

// Families available to the expected-threshold search: B and C on P(4,b,c)
// with q = 3, AZ when a <= 3.
std::vector<Family> search_families(const WeightedSurface& s);

// Candidate value of ν(n·δ·D)/m with m the H-multiple of the divisor:
// c·ν/n for B, b·ν/n for C and AZ.
Rational candidate_value(const WeightedSurface& s, Family f, std::int64_t n, std::int64_t nu_value);

struct GammaEntry {
  Family family = Family::B;
  std::int64_t n = 0;
  std::int64_t h0 = 0;
  std::int64_t nu = 0;
  Rational value;
};

struct GammaSearch {
  Rational best;
  std::vector<GammaEntry> witnesses;  // all entries attaining best, by (family, n)
  std::vector<GammaEntry> table;      // every (family, n), by (family, n)
};

// Exact max over n = 1..N of the candidate values. `jobs` > 1 evaluates the
// table on worker threads; the result is identical for any value.
GammaSearch gamma_search(const WeightedSurface& s, std::int64_t n_max, unsigned jobs = 1);

// max_{n <= N} δ'·ν(n·δ·D_x)/n for a single family B or C (δ' = c for B,
// b for C), and the same without the δ' factor.
Rational restricted_gamma(const WeightedSurface& s, Family f, std::int64_t n_max);
Rational restricted_nu_rate(const WeightedSurface& s, Family f, std::int64_t n_max);

// (q+1)·b when p >= 0, (a-1)·b when p < 0, q = a-1 and -pa/b <= 1.
Rational lower_bound_small_a(const WeightedSurface& s);
// The matching bound on ν(a·D_z) alone: q+1 or a-1.
std::int64_t small_a_nu_bound(const WeightedSurface& s);

enum class ReferenceShape { prime, double_prime };

// P'  = Conv((0,0), (-(2k+3),0), (-3(2k+1), 4(2k+1)))
// P'' = Conv((0,0), (-(k+1),0), (-3k, 4k))
RationalTriangle reference_triangle(std::int64_t k, ReferenceShape which);

}  // namespace effcone
