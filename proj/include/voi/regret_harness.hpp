#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "voi/bandit.hpp"
#include "voi/policies.hpp"

namespace voi {

/// Largest budget brute_force_regret will enumerate (2^budget reward paths).
inline constexpr std::uint64_t kMaxOracleBudget = 20;

struct ExperimentConfig {
  std::size_t arms = 32;
  std::vector<std::uint64_t> budgets;
  std::uint64_t trials = 10000;
  std::vector<PolicyKind> policies;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;  // never affects results

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

struct ResultRow {
  std::string policy;
  std::uint64_t budget = 0;
  double mean_regret = 0.0;
  double stderr_regret = 0.0;
  std::uint64_t trials = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;
};

/// K means drawn i.i.d. uniform on [0, 1].
BanditInstance generate_instance(std::size_t arms, Rng& rng);

/// One pull per arm, then policy-chosen pulls until `budget` pulls have been
/// made; returns the simple regret of the empirically best arm. The final
/// statistics are copied to `final_stats` when given.
double run_trial(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget, Rng& rng,
                 ArmStats* final_stats = nullptr);

/// Seeds of the two streams behind one trial of run_experiment. The instance
/// stream ignores the policy, so all policies see the same instances.
struct TrialSeeds {
  std::uint64_t instance;
  std::uint64_t rewards;
};
TrialSeeds trial_seeds(std::uint64_t seed, const PolicyKind& policy, std::uint64_t budget, std::uint64_t trial);

/// Every (policy, budget) pair in config order, each averaged over `trials`
/// fresh random instances. Deterministic for a fixed seed at any thread count.
ResultTable run_experiment(const ExperimentConfig& config);

/// Exact expected simple regret obtained by enumerating every Bernoulli
/// reward sequence of length `budget`. Refuses budgets above kMaxOracleBudget.
double brute_force_regret(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget);

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::uint64_t trials = 0;
};

/// Mean of run_trial over `trials` independent streams on a fixed instance.
MonteCarloEstimate estimate_regret(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget,
                                   std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Sample mean and standard error (sample stddev / sqrt(n)) of `values`,
/// reduced in index order.
MonteCarloEstimate summarize(const std::vector<double>& values);

/// CSV with header policy,budget,mean_regret,stderr,trials. Each entry of
/// `comments` is written first as a "# " line.
void write_csv(std::ostream& out, const ResultTable& table, const std::vector<std::string>& comments = {});

/// Resolved configuration as "key=value" strings for CSV comments.
std::vector<std::string> describe(const ExperimentConfig& config);

}  // namespace voi
