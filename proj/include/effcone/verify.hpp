#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "effcone/fracsum.hpp"
#include "effcone/numerics.hpp"
#include "effcone/surface.hpp"
#include "effcone/threshold.hpp"

namespace effcone {

// If n·δ'·D_x is a multiple t·D0 of the predicted divisor D0 = m0·δ·D_x
// (δ = b for B, c for C), returns t.
std::optional<std::int64_t> multiple_index(const WeightedSurface& s, const Classification& cls,
                                           Family family_prime, std::int64_t n);

// C(⌈(δ'/δ)(ν0/m0)·n⌉ + 1, 2) + 1 - h0(n·δ'·D_x). Throws PreconditionError
// when the cell is a multiple of D0 (use multiple_margin there).
std::int64_t non_multiple_margin(const WeightedSurface& s, const Classification& cls,
                                 Family family_prime, std::int64_t n);

// C(ν0·t + 2, 2) - h0(t·D0).
std::int64_t multiple_margin(const WeightedSurface& s, const Classification& cls, std::int64_t t);

enum class CheckKind { non_multiple, multiple };

struct MarginRow {
  std::size_t classification = 0;  // index into MarginReport::classifications
  Family family = Family::B;
  std::int64_t n = 0;
  CheckKind kind = CheckKind::non_multiple;
  std::int64_t t = 0;  // multiple of D0, 0 for non-multiple cells
  std::int64_t h0 = 0;
  std::int64_t rhs = 0;
  std::int64_t margin = 0;
};

struct MarginReport {
  WeightedSurface surface;
  std::vector<Classification> classifications;
  std::vector<MarginRow> rows;  // by (classification, family, n)
  std::int64_t min_margin = 0;
  std::vector<MarginRow> failures;  // rows with margin < 1
  // Every (family, n) cell gets the same pass/fail verdict under each
  // classification.
  bool coherent = true;
  Rational gamma_best;
  Rational gamma_pred;
  bool gamma_match = false;
  // Every m0 lies within the scanned range, so gamma_best is final.
  bool gamma_resolved = false;
  // gamma_best is attained by D0 itself for every classification.
  bool witness_at_m0 = false;

  // A short scan that has not reached m0 only fails if it already
  // overshoots the prediction.
  bool gamma_ok() const { return gamma_match || (!gamma_resolved && gamma_best < gamma_pred); }
  bool passed() const { return failures.empty() && coherent && gamma_ok(); }
};

// Routes every (family', n <= n_max) cell through multiple_margin when it is a
// multiple of D0 and non_multiple_margin otherwise, for every classification.
// Failures are data, never exceptions. Requires a = 4 and p < 0.
MarginReport check_surface(const WeightedSurface& s, std::int64_t n_max, unsigned jobs = 1);

struct SweepResult {
  std::vector<MarginReport> reports;  // in input order
  std::int64_t min_margin = 0;        // over all reports; 0 when empty
  std::size_t failing_surfaces = 0;
  // Smallest b such that every swept surface with b' >= b passes.
  std::optional<std::int64_t> passing_from_b;
};

SweepResult sweep(const std::vector<WeightedSurface>& surfaces, std::int64_t n_max,
                  unsigned jobs = 1);

struct DeltaInstance {
  std::int64_t alpha0, beta0, alpha1, beta1;
  int sigma;
  std::int64_t u0, t1, u1;
  int delta_literal;
  int delta_true;
};

struct DeltaCalibration {
  std::int64_t beta_max = 0;
  std::int64_t instances = 0;
  // counts[σ == +1][literal Δ][true Δ]
  std::int64_t counts[2][2][2] = {};
  std::vector<DeltaInstance> disagreements;
};

// All β0 <= beta_max, 1 <= α0 < β0 coprime, σ = ±1 with its (α1, β1),
// 1 <= α1, 1 <= β1 < β0, and all 0 <= u0 < β0. Throws DeltaModelViolation if
// the true Δ is ever outside {0, 1}.
DeltaCalibration calibrate_delta(std::int64_t beta_max);

// The (α1, β1) completing (α0, β0) with α1β0 - β1α0 = σ and 1 <= β1 < β0,
// or nullopt if α1 would be < 1.
std::optional<ChainLink> next_link(std::int64_t alpha0, std::int64_t beta0, int sigma);

}  // namespace effcone
