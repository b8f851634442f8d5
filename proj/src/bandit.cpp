#include "voi/bandit.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "voi/errors.hpp"

namespace voi {

namespace {

void check_arm(std::size_t arm, std::size_t arms) {
  if (arm >= arms) {
    throw UsageError("arm index " + std::to_string(arm) + " out of range for " + std::to_string(arms) +
                     " arms");
  }
}

}  // namespace

BanditInstance::BanditInstance(std::vector<double> means) : means_(std::move(means)), best_(0.0) {
  if (means_.size() < 2) throw UsageError("a bandit instance needs at least two arms");
  for (double m : means_) {
    if (!(m >= 0.0 && m <= 1.0)) throw UsageError("arm means must lie in [0, 1]");
  }
  best_ = *std::max_element(means_.begin(), means_.end());
}

double BanditInstance::mean(std::size_t arm) const {
  check_arm(arm, means_.size());
  return means_[arm];
}

bool ArmStats::all_visited() const {
  return std::all_of(pulls_.begin(), pulls_.end(), [](std::uint64_t n) { return n > 0; });
}

std::uint64_t ArmStats::total_pulls() const {
  std::uint64_t total = 0;
  for (std::uint64_t n : pulls_) total += n;
  return total;
}

double ArmStats::mean(std::size_t arm) const {
  check_arm(arm, pulls_.size());
  if (pulls_[arm] == 0) return std::numeric_limits<double>::quiet_NaN();
  return sums_[arm] / static_cast<double>(pulls_[arm]);
}

void ArmStats::record(std::size_t arm, double reward) {
  check_arm(arm, pulls_.size());
  if (!(reward >= 0.0 && reward <= 1.0)) throw UsageError("reward must lie in [0, 1]");
  ++pulls_[arm];
  sums_[arm] += reward;
}

void BudgetState::consume() {
  if (used >= total) throw PreconditionError("budget exhausted");
  ++used;
}

int sample_arm(const BanditInstance& instance, std::size_t arm, Rng& rng) {
  const double p = instance.mean(arm);
  return rng.uniform() < p ? 1 : 0;
}

ArmStats update_stats(ArmStats stats, std::size_t arm, double reward) {
  stats.record(arm, reward);
  return stats;
}

BestTwo empirical_best_two(const ArmStats& stats) {
  const std::size_t k = stats.arms();
  if (k < 2) throw PreconditionError("need at least two arms");
  if (!stats.all_visited()) throw PreconditionError("every arm must be pulled before ranking");

  // Strict comparisons keep the earlier index on ties.
  std::size_t alpha = 0;
  std::size_t beta = 1;
  if (stats.mean(1) > stats.mean(0)) std::swap(alpha, beta);
  for (std::size_t i = 2; i < k; ++i) {
    const double m = stats.mean(i);
    if (m > stats.mean(alpha)) {
      beta = alpha;
      alpha = i;
    } else if (m > stats.mean(beta)) {
      beta = i;
    }
  }
  return {alpha, beta};
}

double simple_regret(const BanditInstance& instance, std::size_t chosen) { return instance.gap(chosen); }

}  // namespace voi
