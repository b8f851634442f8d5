#include "voi/regret_harness.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "voi/errors.hpp"
#include "voi/parallel.hpp"

namespace voi {

namespace {

// Stream tags keep instance draws and reward draws independent.
constexpr std::uint64_t kInstanceStream = 1;
constexpr std::uint64_t kRewardStream = 2;

struct OracleWalk {
  const BanditInstance& instance;
  const PolicyKind& policy;

  double expected_regret(ArmStats& stats, BudgetState& budget) const {
    if (budget.remaining() == 0) return simple_regret(instance, empirical_best_two(stats).alpha);

    const std::size_t arm = next_arm(stats, budget);
    const double p = instance.mean(arm);
    double total = 0.0;
    for (int reward : {1, 0}) {
      const double weight = reward == 1 ? p : 1.0 - p;
      if (weight == 0.0) continue;
      ArmStats child_stats = update_stats(stats, arm, reward);
      BudgetState child_budget = budget;
      child_budget.consume();
      total += weight * expected_regret(child_stats, child_budget);
    }
    return total;
  }

  std::size_t next_arm(const ArmStats& stats, const BudgetState& budget) const {
    if (budget.used < stats.arms()) return static_cast<std::size_t>(budget.used);
    return select_arm(policy, stats, budget);
  }
};

}  // namespace

void ExperimentConfig::validate() const {
  if (arms < 2) throw ConfigError("arm count must be at least 2");
  if (budgets.empty()) throw ConfigError("at least one budget is required");
  for (std::uint64_t b : budgets) {
    if (b < arms) throw ConfigError(fmt::format("budget {} is smaller than the arm count {}", b, arms));
  }
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (policies.empty()) throw ConfigError("at least one policy is required");
}

BanditInstance generate_instance(std::size_t arms, Rng& rng) {
  if (arms < 2) throw UsageError("arm count must be at least 2");
  std::vector<double> means(arms);
  for (double& m : means) m = rng.uniform();
  return BanditInstance(std::move(means));
}

double run_trial(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget, Rng& rng,
                 ArmStats* final_stats) {
  const std::size_t k = instance.arms();
  if (budget < k) throw ConfigError(fmt::format("budget {} is smaller than the arm count {}", budget, k));

  ArmStats stats(k);
  BudgetState state{budget, 0};
  for (std::size_t arm = 0; arm < k; ++arm) {
    stats.record(arm, sample_arm(instance, arm, rng));
    state.consume();
  }
  while (state.remaining() > 0) {
    const std::size_t arm = select_arm(policy, stats, state);
    stats.record(arm, sample_arm(instance, arm, rng));
    state.consume();
  }
  if (final_stats) *final_stats = stats;
  return simple_regret(instance, empirical_best_two(stats).alpha);
}

TrialSeeds trial_seeds(std::uint64_t seed, const PolicyKind& policy, std::uint64_t budget, std::uint64_t trial) {
  return {derive_seed(seed, {kInstanceStream, budget, trial}),
          derive_seed(seed, {kRewardStream, policy.stream_key(), budget, trial})};
}

MonteCarloEstimate summarize(const std::vector<double>& values) {
  MonteCarloEstimate est;
  est.trials = values.size();
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - est.mean) * (v - est.mean);
    const double n = static_cast<double>(values.size());
    est.stderr_mean = std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
  }
  return est;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  ResultTable table;
  for (const PolicyKind& policy : config.policies) {
    for (std::uint64_t budget : config.budgets) {
      std::vector<double> regrets(config.trials);
      parallel_for(config.trials, config.threads, [&](std::size_t trial) {
        const TrialSeeds seeds = trial_seeds(config.seed, policy, budget, trial);
        Rng instance_rng(seeds.instance);
        const BanditInstance instance = generate_instance(config.arms, instance_rng);
        Rng reward_rng(seeds.rewards);
        regrets[trial] = run_trial(instance, policy, budget, reward_rng);
      });
      const MonteCarloEstimate est = summarize(regrets);
      table.rows.push_back({policy.name(), budget, est.mean, est.stderr_mean, est.trials});
    }
  }
  return table;
}

double brute_force_regret(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget) {
  if (budget > kMaxOracleBudget) {
    throw LimitError(fmt::format("oracle enumeration limited to budget <= {}, got {}", kMaxOracleBudget, budget));
  }
  if (budget < instance.arms()) throw ConfigError("budget is smaller than the arm count");
  ArmStats stats(instance.arms());
  BudgetState state{budget, 0};
  return OracleWalk{instance, policy}.expected_regret(stats, state);
}

MonteCarloEstimate estimate_regret(const BanditInstance& instance, const PolicyKind& policy, std::uint64_t budget,
                                   std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  std::vector<double> regrets(trials);
  parallel_for(trials, threads, [&](std::size_t trial) {
    Rng rng(derive_seed(seed, {kRewardStream, policy.stream_key(), budget, trial}));
    regrets[trial] = run_trial(instance, policy, budget, rng);
  });
  return summarize(regrets);
}

void write_csv(std::ostream& out, const ResultTable& table, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) fmt::print(out, "# {}\n", c);
  out << "policy,budget,mean_regret,stderr,trials\n";
  for (const ResultRow& r : table.rows) {
    fmt::print(out, "{},{},{:.17g},{:.17g},{}\n", r.policy, r.budget, r.mean_regret, r.stderr_regret, r.trials);
  }
}

std::vector<std::string> describe(const ExperimentConfig& config) {
  std::vector<std::string> budgets;
  for (auto b : config.budgets) budgets.push_back(std::to_string(b));
  std::vector<std::string> policies;
  for (const auto& p : config.policies) {
    policies.push_back(p.tag == PolicyTag::ucb1 ? fmt::format("{}(c={:.17g})", p.name(), p.ucb_c) : p.name());
  }
  return {
      "subcommand=bandit",
      fmt::format("arms={}", config.arms),
      fmt::format("budgets={}", fmt::join(budgets, ",")),
      fmt::format("trials={}", config.trials),
      fmt::format("policies={}", fmt::join(policies, ",")),
      fmt::format("seed={}", config.seed),
  };
}

}  // namespace voi
