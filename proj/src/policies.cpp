#include "voi/policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "voi/errors.hpp"

namespace voi {

namespace {

std::optional<std::size_t> first_unvisited(const ArmStats& stats) {
  for (std::size_t i = 0; i < stats.arms(); ++i) {
    if (!stats.visited(i)) return i;
  }
  return std::nullopt;
}

void check_scored(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta) {
  const std::size_t k = stats.arms();
  if (arm >= k || alpha >= k || beta >= k) throw UsageError("arm index out of range");
  if (!stats.visited(arm) || !stats.visited(alpha) || !stats.visited(beta)) {
    throw PreconditionError("VOI bounds need every scored arm pulled at least once");
  }
}

double exponent_factor(std::uint64_t n, std::uint64_t remaining, VoiVariant variant) {
  return variant == VoiVariant::exact_phi ? phi(n, remaining) : kPhiLowerBound;
}

// Numerator of the value factor: X_beta for alpha, 1 - X_alpha for a challenger.
double value_gain(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta) {
  return arm == alpha ? stats.mean(beta) : 1.0 - stats.mean(alpha);
}

}  // namespace

std::string PolicyKind::name() const {
  switch (tag) {
    case PolicyTag::uniform:
      return "uniform";
    case PolicyTag::ucb1:
      return "ucb1";
    case PolicyTag::voi:
      return variant == VoiVariant::exact_phi ? "voi-phi" : "voi";
  }
  return "unknown";
}

std::uint64_t PolicyKind::stream_key() const {
  return static_cast<std::uint64_t>(tag) * 16 + (tag == PolicyTag::voi ? static_cast<std::uint64_t>(variant) : 0);
}

double phi(std::uint64_t n, std::uint64_t remaining) {
  if (remaining == 0) throw PreconditionError("phi needs a positive remaining budget");
  const double ratio = static_cast<double>(n) / static_cast<double>(remaining);
  const double q = (1.0 + ratio) / (1.0 + std::sqrt(ratio));
  return 2.0 * q * q;
}

double prob_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                  std::uint64_t remaining, VoiVariant variant) {
  check_scored(stats, arm, alpha, beta);
  const double gap = arm == alpha ? stats.mean(alpha) - stats.mean(beta) : stats.mean(alpha) - stats.mean(arm);
  const std::uint64_t n = stats.pulls(arm);
  return 2.0 * std::exp(-exponent_factor(n, remaining, variant) * gap * gap * static_cast<double>(n));
}

double voi_upper_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                       std::uint64_t remaining, VoiVariant variant) {
  if (remaining == 0) throw PreconditionError("VOI bound needs a positive remaining budget");
  const double p = prob_bound(stats, arm, alpha, beta, remaining, variant);
  const double n = static_cast<double>(stats.pulls(arm));
  return static_cast<double>(remaining) * value_gain(stats, arm, alpha, beta) / n * p;
}

double voi_tight_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                       std::uint64_t remaining, VoiVariant variant) {
  if (remaining == 0) throw PreconditionError("VOI bound needs a positive remaining budget");
  const double p = prob_bound(stats, arm, alpha, beta, remaining, variant);
  const double budget = static_cast<double>(remaining);
  const double n = static_cast<double>(stats.pulls(arm));
  return budget * value_gain(stats, arm, alpha, beta) / (budget + n) * p;
}

VoiEstimate voi_estimates(const ArmStats& stats, std::uint64_t remaining, VoiVariant variant) {
  const BestTwo best = empirical_best_two(stats);
  VoiEstimate est;
  est.alpha = best.alpha;
  est.beta = best.beta;
  est.lambda_hat.resize(stats.arms());
  for (std::size_t i = 0; i < stats.arms(); ++i) {
    est.lambda_hat[i] = voi_upper_bound(stats, i, best.alpha, best.beta, remaining, variant);
    if (prob_bound(stats, i, best.alpha, best.beta, remaining, variant) > 1.0) est.prob_bound_above_one = true;
  }
  return est;
}

std::size_t voi_select(const ArmStats& stats, const BudgetState& budget, VoiVariant variant) {
  if (stats.arms() < 2) throw PreconditionError("VOI selection needs at least two arms");
  if (budget.remaining() == 0) throw PreconditionError("no remaining budget to allocate");
  if (auto unvisited = first_unvisited(stats)) return *unvisited;

  const BestTwo best = empirical_best_two(stats);
  std::size_t chosen = 0;
  double top = -1.0;
  for (std::size_t i = 0; i < stats.arms(); ++i) {
    const double v = voi_upper_bound(stats, i, best.alpha, best.beta, budget.remaining(), variant);
    if (v > top) {
      top = v;
      chosen = i;
    }
  }
  return chosen;
}

std::size_t ucb1_select(const ArmStats& stats, std::uint64_t t, double c) {
  if (stats.arms() == 0) throw PreconditionError("UCB1 selection needs arms");
  if (auto unvisited = first_unvisited(stats)) return *unvisited;

  const double log_t = std::log(static_cast<double>(std::max<std::uint64_t>(t, 1)));
  std::size_t chosen = 0;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < stats.arms(); ++i) {
    const double score = stats.mean(i) + c * std::sqrt(2.0 * log_t / static_cast<double>(stats.pulls(i)));
    if (score > top) {
      top = score;
      chosen = i;
    }
  }
  return chosen;
}

std::size_t uniform_select(const ArmStats& stats, std::uint64_t t) {
  if (stats.arms() == 0) throw PreconditionError("uniform selection needs arms");
  return static_cast<std::size_t>(t % stats.arms());
}

std::size_t select_arm(const PolicyKind& policy, const ArmStats& stats, const BudgetState& budget) {
  switch (policy.tag) {
    case PolicyTag::uniform:
      return uniform_select(stats, budget.used);
    case PolicyTag::ucb1:
      return ucb1_select(stats, budget.used, policy.ucb_c);
    case PolicyTag::voi:
      return voi_select(stats, budget, policy.variant);
  }
  throw UsageError("unknown policy");
}

}  // namespace voi
