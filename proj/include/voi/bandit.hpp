#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "voi/rng.hpp"

namespace voi {

/// Ground-truth Bernoulli arm means. Only the harness sees these; policies
/// work from ArmStats alone.
class BanditInstance {
 public:
  /// Throws UsageError unless there are at least two arms, all with means in [0, 1].
  explicit BanditInstance(std::vector<double> means);

  std::size_t arms() const { return means_.size(); }
  double mean(std::size_t arm) const;
  std::span<const double> means() const { return means_; }

  /// mu_* = max over means.
  double best_mean() const { return best_; }
  /// Delta_j = mu_* - mu_j.
  double gap(std::size_t arm) const { return best_ - mean(arm); }

 private:
  std::vector<double> means_;
  double best_;
};

/// Per-arm running statistics kept as (pull count, reward sum); the sample
/// mean is derived on demand.
class ArmStats {
 public:
  explicit ArmStats(std::size_t arms) : pulls_(arms, 0), sums_(arms, 0.0) {}

  std::size_t arms() const { return pulls_.size(); }
  std::uint64_t pulls(std::size_t arm) const { return pulls_.at(arm); }
  double sum(std::size_t arm) const { return sums_.at(arm); }
  bool visited(std::size_t arm) const { return pulls(arm) > 0; }
  bool all_visited() const;
  std::uint64_t total_pulls() const;

  /// Sample mean, or quiet NaN for an arm that has never been pulled.
  double mean(std::size_t arm) const;

  /// Records one pull. Rejects rewards outside [0, 1].
  void record(std::size_t arm, double reward);

 private:
  std::vector<std::uint64_t> pulls_;
  std::vector<double> sums_;
};

/// Pull budget at a decision point; remaining() is the N of the VOI bounds.
struct BudgetState {
  std::uint64_t total = 0;
  std::uint64_t used = 0;

  std::uint64_t remaining() const { return total - used; }
  /// Throws PreconditionError when the budget is already exhausted.
  void consume();
};

/// Role of an arm in the VOI decomposition: the current empirical best (its
/// mean may drop below the runner-up) or a challenger (may overtake it).
enum class VoiRole { alpha, challenger };

/// Upper bounds on the value of information of spending the rest of the
/// budget on each arm, evaluated at one decision point.
struct VoiEstimate {
  std::vector<double> lambda_hat;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  /// Set when some arm's Hoeffding probability bound exceeded 1 (bounds are not clamped).
  bool prob_bound_above_one = false;

  VoiRole role(std::size_t arm) const { return arm == alpha ? VoiRole::alpha : VoiRole::challenger; }
};

/// Bernoulli(mean[arm]) draw using exactly one value from `rng`.
int sample_arm(const BanditInstance& instance, std::size_t arm, Rng& rng);

ArmStats update_stats(ArmStats stats, std::size_t arm, double reward);

struct BestTwo {
  std::size_t alpha;
  std::size_t beta;
};

/// Arms with the highest and second-highest sample means, ties to the lower
/// index. Every arm must have been pulled at least once.
BestTwo empirical_best_two(const ArmStats& stats);

/// Realized simple regret of recommending `chosen`: mu_* - mu_chosen.
double simple_regret(const BanditInstance& instance, std::size_t chosen);

}  // namespace voi
