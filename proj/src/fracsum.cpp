#include "effcone/fracsum.hpp"

#include <numeric>
#include <string>

namespace effcone {

namespace {

void require_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) throw PreconditionError("sigma must be +1 or -1");
}

void require_step_range(std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                        std::int64_t beta) {
  if (t < 0 || u < 0 || !(u < beta && beta < beta_prime)) {
    throw PreconditionError("epsilon needs t >= 0 and 0 <= u < beta < beta' (got t=" +
                            std::to_string(t) + ", u=" + std::to_string(u) + ", beta'=" +
                            std::to_string(beta_prime) + ", beta=" + std::to_string(beta) + ")");
  }
}

void require_coprime(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta < 1 || std::gcd(alpha, beta) != 1) {
    throw PreconditionError("expected coprime positive integers, got (" + std::to_string(alpha) +
                            ", " + std::to_string(beta) + ")");
  }
}

std::string link_text(std::int64_t alpha, std::int64_t beta) {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

// prev -> next must satisfy the chain hypotheses; `terminal` marks the last link.
void check_pair(std::int64_t alpha_prev, std::int64_t beta_prev, const ChainLink& next,
                bool terminal) {
  require_sigma(next.sigma);
  if (next.alpha < 1 || next.beta < 1) {
    throw PreconditionError("chain entries must be positive, got " +
                            link_text(next.alpha, next.beta));
  }
  if (next.beta >= beta_prev) {
    throw PreconditionError("chain beta not strictly decreasing at " +
                            link_text(alpha_prev, beta_prev) + " -> " +
                            link_text(next.alpha, next.beta));
  }
  const bool terminal_half = terminal && next.alpha == 1 && next.beta == 2 && alpha_prev == 1;
  if (next.alpha >= alpha_prev && !terminal_half) {
    throw PreconditionError("chain alpha not strictly decreasing at " +
                            link_text(alpha_prev, beta_prev) + " -> " +
                            link_text(next.alpha, next.beta));
  }
  if (next.alpha * beta_prev - next.beta * alpha_prev != next.sigma) {
    throw PreconditionError("chain determinant at " + link_text(alpha_prev, beta_prev) + " -> " +
                            link_text(next.alpha, next.beta) + " is not " +
                            std::to_string(next.sigma));
  }
}

}  // namespace

Rational frac_sum(std::int64_t alpha, std::int64_t beta, std::int64_t u) {
  if (beta < 1 || u < 0) throw PreconditionError("frac_sum needs beta >= 1 and u >= 0");
  const std::int64_t step = mod_floor(alpha, beta);
  std::int64_t residue = 0;
  Integer total = 0;
  std::int64_t partial = 0;
  for (std::int64_t j = 0; j <= u; ++j) {
    partial += residue;
    if (partial > (std::int64_t{1} << 60)) {
      total += Integer(static_cast<long>(partial));
      partial = 0;
    }
    residue += step;
    if (residue >= beta) residue -= beta;
  }
  total += Integer(static_cast<long>(partial));
  return Rational(total, Integer(static_cast<long>(beta)));
}

Rational centered_sum(std::int64_t beta, std::int64_t u, std::int64_t alpha) {
  require_coprime(alpha, beta);
  if (u < 0 || u >= beta) throw PreconditionError("centered_sum needs 0 <= u < beta");
  return Rational((u + 1) * (beta - 1), 2 * beta) - frac_sum(alpha, beta, u);
}

std::int64_t floor_sum(std::int64_t alpha, std::int64_t beta) {
  require_coprime(alpha, beta);
  return (alpha - 1) * (beta - 1) / 2;
}

std::int64_t ceil_sum(std::int64_t alpha, std::int64_t beta) {
  require_coprime(alpha, beta);
  return (alpha + 1) * (beta - 1) / 2;
}

Rational full_sum(std::int64_t alpha0, std::int64_t beta0, std::int64_t beta1, int sigma) {
  require_sigma(sigma);
  require_coprime(alpha0, beta0);
  if (beta1 < 1 || beta1 >= beta0) throw PreconditionError("full_sum needs 1 <= beta1 < beta0");
  if ((beta1 * alpha0 + sigma) % beta0 != 0) {
    throw PreconditionError("full_sum: no integer alpha1 with alpha1*beta0 - beta1*alpha0 = sigma");
  }
  return Rational(1 - sigma + (beta1 + sigma) * (beta0 - sigma), 2 * beta0);
}

Rational epsilon_prime(int sigma, std::int64_t u, std::int64_t beta_prime, std::int64_t beta) {
  require_sigma(sigma);
  require_step_range(0, u, beta_prime, beta);
  return Rational((u + 1) * (sigma * u + beta_prime - beta), 2 * beta_prime * beta);
}

Rational epsilon_double_prime(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                              std::int64_t beta) {
  require_sigma(sigma);
  require_step_range(t, u, beta_prime, beta);
  return Rational(sigma * t * (beta * (t - sigma) + 2 * u + 1 - beta_prime), 2 * beta_prime);
}

Rational epsilon_without_delta(int sigma, std::int64_t t, std::int64_t u,
                               std::int64_t beta_prime, std::int64_t beta) {
  return epsilon_prime(sigma, u, beta_prime, beta) +
         epsilon_double_prime(sigma, t, u, beta_prime, beta);
}

int literal_delta(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                  std::int64_t beta) {
  require_sigma(sigma);
  require_step_range(t, u, beta_prime, beta);
  return (sigma == -1 && beta_prime - beta <= beta * t + u) ? 1 : 0;
}

Rational epsilon(int sigma, std::int64_t t, std::int64_t u, std::int64_t beta_prime,
                 std::int64_t beta) {
  return epsilon_without_delta(sigma, t, u, beta_prime, beta) +
         Rational(literal_delta(sigma, t, u, beta_prime, beta));
}

Rational epsilon_in_v(int sigma, std::int64_t v, std::int64_t u, std::int64_t beta_prime,
                      std::int64_t beta, int delta) {
  require_sigma(sigma);
  const std::int64_t denom = 2 * beta_prime * beta;
  if (sigma == -1) return Rational(-(v + 1) * (v + beta - beta_prime), denom) + Rational(delta);
  return Rational((v + 1) * (v - beta_prime - beta), denom) + Rational(u + 1, beta);
}

Rational epsilon_turning_point(int sigma, std::int64_t beta_prime, std::int64_t beta) {
  require_sigma(sigma);
  return Rational(sigma * beta + beta_prime - 1, 2);
}

EpsilonBounds epsilon_bounds(int sigma, std::int64_t beta_prime, std::int64_t beta) {
  require_sigma(sigma);
  if (!(2 <= beta && beta < beta_prime)) {
    throw PreconditionError("epsilon_bounds needs 2 <= beta < beta'");
  }
  const std::int64_t gap = beta_prime - beta;
  if (sigma == 1) {
    const std::int64_t sum = beta_prime + beta - 1;
    Rational upper(beta_prime - 1, 2 * beta_prime);
    return {Rational(-sum * sum + 4 * gap, 8 * beta_prime * beta), upper, upper};
  }
  return {Rational(gap, 2 * beta_prime * beta), Rational((gap + 3) * (gap - 1), 8 * beta * beta_prime),
          Rational(1)};
}

void validate_links(std::int64_t alpha0, std::int64_t beta0, const std::vector<ChainLink>& links) {
  if (alpha0 < 1 || beta0 < 1) throw PreconditionError("chain head must be positive");
  std::int64_t alpha = alpha0, beta = beta0;
  for (std::size_t i = 0; i < links.size(); ++i) {
    check_pair(alpha, beta, links[i], i + 1 == links.size());
    alpha = links[i].alpha;
    beta = links[i].beta;
  }
}

ReductionChain::ReductionChain(std::int64_t alpha0, std::int64_t beta0,
                               std::vector<ChainLink> links)
    : alpha0_(alpha0), beta0_(beta0), links_(std::move(links)) {
  validate_links(alpha0_, beta0_, links_);
  require_coprime(alpha0_, beta0_);
}

ReductionStep reduce_step(std::int64_t alpha_prev, std::int64_t beta_prev, const ChainLink& link,
                          std::int64_t u_prev) {
  require_sigma(link.sigma);
  require_coprime(alpha_prev, beta_prev);
  if (link.alpha < 1 || link.beta < 1 || link.beta >= beta_prev) {
    throw PreconditionError("reduction step needs 1 <= beta < beta' and alpha >= 1");
  }
  if (link.alpha * beta_prev - link.beta * alpha_prev != link.sigma) {
    throw PreconditionError("reduction step determinant at " + link_text(alpha_prev, beta_prev) +
                            " -> " + link_text(link.alpha, link.beta) + " is not " +
                            std::to_string(link.sigma));
  }
  if (u_prev < 0 || u_prev >= beta_prev) throw PreconditionError("reduction step needs 0 <= u < beta'");
  ReductionStep step;
  step.link = link;
  step.t = u_prev / link.beta;
  step.u = u_prev % link.beta;
  step.eps_without_delta = epsilon_without_delta(link.sigma, step.t, step.u, beta_prev, link.beta);
  step.delta_literal = literal_delta(link.sigma, step.t, step.u, beta_prev, link.beta);
  const Rational gap = centered_sum(beta_prev, u_prev, alpha_prev) -
                       centered_sum(link.beta, step.u, link.alpha) - step.eps_without_delta;
  if (!(gap == Rational(0) || gap == Rational(1))) {
    throw DeltaModelViolation("calibrated delta " + gap.str() + " outside {0,1} at " +
                              link_text(alpha_prev, beta_prev) + " -> " +
                              link_text(link.alpha, link.beta) + ", u=" + std::to_string(u_prev));
  }
  step.delta_calibrated = gap == Rational(1) ? 1 : 0;
  step.eps = step.eps_without_delta + Rational(step.delta_calibrated);
  return step;
}

ReductionResult reduce_chain(const ReductionChain& chain, std::int64_t u0, DeltaPolicy policy) {
  if (u0 < 0 || u0 >= chain.beta0()) throw PreconditionError("reduce_chain needs 0 <= u0 < beta0");
  ReductionResult out;
  out.direct = centered_sum(chain.beta0(), u0, chain.alpha0());

  std::int64_t alpha_prev = chain.alpha0(), beta_prev = chain.beta0(), u_prev = u0;
  Rational eps_total;
  for (const ChainLink& link : chain.links()) {
    ReductionStep step = reduce_step(alpha_prev, beta_prev, link, u_prev);
    if (policy == DeltaPolicy::literal) {
      step.eps = step.eps_without_delta + Rational(step.delta_literal);
    }
    eps_total += step.eps;
    alpha_prev = link.alpha;
    beta_prev = link.beta;
    u_prev = step.u;
    out.steps.push_back(std::move(step));
  }
  out.u_terminal = u_prev;
  out.terminal = centered_sum(beta_prev, u_prev, alpha_prev);
  out.total = out.terminal + eps_total;
  return out;
}

std::vector<ChainLink> standard_chain(int entry, std::int64_t k, bool c_case) {
  std::vector<ChainLink> links;
  switch (entry) {
    case 1:
      if (k < 2) throw PreconditionError("entry 1 needs k >= 2");
      links = {{8 * k * k - 4 * k - 1, 16 * k * k, 1},
               {4 * k * k - 4 * k + 1, 8 * k * k - 4 * k + 1, 1},
               {4 * k - 3, 8 * k - 2, -1},
               {k - 1, 2 * k - 1, -1},
               {1, 2, 1}};
      break;
    case 2:
      if (k < 1) throw PreconditionError("entry 2 needs k >= 1");
      links = {{8 * k * k + 4 * k - 1, 4 * (2 * k + 1) * (2 * k + 1), 1},
               {4 * k * k, 8 * k * k + 4 * k + 1, 1},
               {4 * k - 1, 8 * k + 2, -1},
               {k, 2 * k + 1, 1},
               {1, 2, 1}};
      break;
    case 3:
      if (k < 1) throw PreconditionError("entry 3 needs k >= 1");
      links = {{2 * k - 1, 4 * k, 1}, {k, 2 * k + 1, 1}, {1, 2, 1}};
      break;
    case 4:
      if (k < 1) throw PreconditionError("entry 4 needs k >= 1");
      links = {{k, 2 * k + 1, 1}, {1, 2, 1}};
      break;
    default:
      throw PreconditionError("standard chain entry must be 1..4, got " + std::to_string(entry));
  }
  if (c_case) links.front().sigma = -1;
  if (links.front().alpha < 1) throw PreconditionError("standard chain entry has alpha < 1");
  for (std::size_t i = 1; i < links.size(); ++i) {
    check_pair(links[i - 1].alpha, links[i - 1].beta, links[i], i + 1 == links.size());
  }
  return links;
}

}  // namespace effcone
