#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "effcone/numerics.hpp"

namespace effcone {

// Σ_{j=0}^{u} {αj/β} by direct summation. Requires beta >= 1, u >= 0.
Rational frac_sum(std::int64_t alpha, std::int64_t beta, std::int64_t u);

// F(β, u, α) = (u+1)(β-1)/(2β) - Σ_{j=0}^{u} {αj/β}: the deviation of a
// fractional-part partial sum from its mean. Requires gcd(α, β) = 1 and
// 0 <= u < β.
Rational centered_sum(std::int64_t beta, std::int64_t u, std::int64_t alpha);

// Σ_{k=0}^{β-1} ⌊αk/β⌋ = (α-1)(β-1)/2 and Σ ⌈αk/β⌉ = (α+1)(β-1)/2 for
// coprime α, β.
std::int64_t floor_sum(std::int64_t alpha, std::int64_t beta);
std::int64_t ceil_sum(std::int64_t alpha, std::int64_t beta);

// Closed form of Σ_{j=0}^{β1} {α0 j/β0} when some α1 has α1β0 - β1α0 = σ.
Rational full_sum(std::int64_t alpha0, std::int64_t beta0, std::int64_t beta1, int sigma);

// One reduction step (α', β') -> (α, β) with αβ' - βα' = σ incurs the error
//   ε(σ,t,u,β',β) = ε'(σ,u,β',β) + ε''(σ,t,u,β',β) + Δ.
// Preconditions for all of these: σ = ±1, t >= 0, 0 <= u < β < β'.
Rational epsilon_prime(int sigma, std::int64_t u, std::int64_t beta_prime, std::int64_t beta);
Rational epsilon_double_prime(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                              std::int64_t beta);
Rational epsilon_without_delta(int sigma, std::int64_t t, std::int64_t u,
                               std::int64_t beta_prime, std::int64_t beta);

// The closed-form crossing correction: 1 iff σ = -1 and β' - β <= βt + u.
int literal_delta(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                  std::int64_t beta);

// ε with the literal Δ.
Rational epsilon(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                 std::int64_t beta);

// How a reduction fills in Δ: `literal` uses literal_delta; `calibrated`
// uses whichever integer makes the step identity exact (checked to be 0 or 1).
enum class DeltaPolicy { literal, calibrated };

// ε rewritten in v = u + βt (Δ supplied by the caller):
//   σ = -1 : -(v+1)(v+β-β')/(2β'β) + Δ
//   σ = +1 :  (v+1)(v-β'-β)/(2β'β) + (u+1)/β
Rational epsilon_in_v(int sigma, std::int64_t v, std::int64_t u, std::int64_t beta_prime,
                      std::int64_t beta, int delta);
// Vertex (σβ + β' - 1)/2 of the quadratic above.
Rational epsilon_turning_point(int sigma, std::int64_t beta_prime, std::int64_t beta);

struct EpsilonBounds {
  Rational lower;
  Rational upper_small;  // σ = -1: valid while u + βt < β' - β
  Rational upper_large;  // σ = -1: valid otherwise; equals upper_small for σ = +1
};

// Closed-form bounds on ε(σ, ·, ·, β', β) over 0 <= u < β,
// 0 <= t <= ⌊(β'-1-u)/β⌋. Requires 2 <= β < β'.
EpsilonBounds epsilon_bounds(int sigma, std::int64_t beta_prime, std::int64_t beta);

struct ChainLink {
  std::int64_t alpha;
  std::int64_t beta;
  int sigma;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

// Checks consecutive links of a chain: positive entries, β strictly
// decreasing, α strictly decreasing (a terminal (1, 2) link may follow α = 1),
// and α_i β_{i-1} - β_i α_{i-1} = σ_i. Throws PreconditionError.
void validate_links(std::int64_t alpha0, std::int64_t beta0, const std::vector<ChainLink>& links);

// (α0, β0) followed by links (α_i, β_i, σ_i), validated on construction.
class ReductionChain {
 public:
  ReductionChain(std::int64_t alpha0, std::int64_t beta0, std::vector<ChainLink> links);

  std::int64_t alpha0() const { return alpha0_; }
  std::int64_t beta0() const { return beta0_; }
  const std::vector<ChainLink>& links() const { return links_; }

 private:
  std::int64_t alpha0_;
  std::int64_t beta0_;
  std::vector<ChainLink> links_;
};

struct ReductionStep {
  ChainLink link;
  std::int64_t u = 0;
  std::int64_t t = 0;
  Rational eps_without_delta;
  int delta_literal = 0;
  int delta_calibrated = 0;
  Rational eps;  // with the Δ chosen by the policy
};

struct ReductionResult {
  std::vector<ReductionStep> steps;
  std::int64_t u_terminal = 0;
  Rational terminal;  // F(β_N, u_N, α_N); κ' when (α_N, β_N) = (1, 2)
  Rational total;     // terminal + Σ eps
  Rational direct;    // F(β0, u0, α0) evaluated directly
};

// Thrown when the calibrated Δ of a step is not 0 or 1.
class DeltaModelViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One step (α', β') -> link at index u' = β·t + u, with both Δ values. Checks
// the determinant and 1 <= β < β' but not α monotonicity.
ReductionStep reduce_step(std::int64_t alpha_prev, std::int64_t beta_prev, const ChainLink& link,
                          std::int64_t u_prev);

// Successive division u_{i-1} = β_i t_i + u_i and per-step errors.
// Requires 0 <= u0 < β0.
ReductionResult reduce_chain(const ReductionChain& chain, std::int64_t u0,
                             DeltaPolicy policy = DeltaPolicy::calibrated);

// The (α_i, β_i, σ_i) links used to bound the fractional-sum defect of the
// four interval endpoints (entries 1..4), to be prepended by (-p, b).
// With c_case the first sign is flipped to -1. Entry 1 needs k >= 2, the
// others k >= 1; links that break monotonicity are rejected.
std::vector<ChainLink> standard_chain(int entry, std::int64_t k, bool c_case);

}  // namespace effcone
