#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "voi/bandit.hpp"

namespace voi {

enum class PolicyTag { uniform, ucb1, voi };

/// Exponent factor used in the Hoeffding probability bound: the fixed
/// constant 1.37, or the budget-dependent phi(n, N) it lower-bounds.
enum class VoiVariant { constant_137, exact_phi };

inline constexpr double kPhiLowerBound = 1.37;

struct PolicyKind {
  PolicyTag tag = PolicyTag::voi;
  VoiVariant variant = VoiVariant::constant_137;  // meaningful for voi only
  double ucb_c = 1.0;                             // meaningful for ucb1 only

  static PolicyKind uniform() { return {PolicyTag::uniform}; }
  static PolicyKind ucb1(double c = 1.0) { return {PolicyTag::ucb1, VoiVariant::constant_137, c}; }
  static PolicyKind voi(VoiVariant v = VoiVariant::constant_137) { return {PolicyTag::voi, v}; }

  /// "uniform", "ucb1", "voi" or "voi-phi".
  std::string name() const;
  /// Stable integer identifying tag and variant, used to key rng streams.
  std::uint64_t stream_key() const;
};

/// phi(n, N) = 2 ((1 + n/N) / (1 + sqrt(n/N)))^2. Requires N >= 1.
double phi(std::uint64_t n, std::uint64_t remaining);

/// Hoeffding bound 2 exp(-f * gap^2 * n) on the probability that spending the
/// remaining budget on `arm` changes which arm is the empirical best. The gap
/// is X_alpha - X_beta for the alpha arm and X_alpha - X_arm otherwise; f is
/// 1.37 or phi(n_arm, N). The result is not clamped to 1.
double prob_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                  std::uint64_t remaining, VoiVariant variant);

/// Upper bound Lambda-hat on the value of information of spending the rest of
/// the budget on `arm`:
///   alpha arm:   (N * X_beta / n_alpha)       * prob_bound
///   challenger:  (N * (1 - X_alpha) / n_arm)  * prob_bound
double voi_upper_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                       std::uint64_t remaining, VoiVariant variant);

/// Same bound with the tighter N/(N + n) value factor in place of N/n.
/// Diagnostic only; selection uses voi_upper_bound.
double voi_tight_bound(const ArmStats& stats, std::size_t arm, std::size_t alpha, std::size_t beta,
                       std::uint64_t remaining, VoiVariant variant);

/// Lambda-hat for every arm at once. All arms must have been pulled.
VoiEstimate voi_estimates(const ArmStats& stats, std::uint64_t remaining, VoiVariant variant);

/// Lowest-index unvisited arm if any; otherwise the arm with the largest
/// Lambda-hat for N = budget.remaining(), ties to the lowest index.
std::size_t voi_select(const ArmStats& stats, const BudgetState& budget, VoiVariant variant);

/// UCB1: lowest-index unvisited arm first, then argmax of
/// X_i + c * sqrt(2 ln t / n_i), ties to the lowest index.
std::size_t ucb1_select(const ArmStats& stats, std::uint64_t t, double c);

/// Round robin: t mod K.
std::size_t uniform_select(const ArmStats& stats, std::uint64_t t);

/// Dispatches on policy.tag; t is budget.used.
std::size_t select_arm(const PolicyKind& policy, const ArmStats& stats, const BudgetState& budget);

}  // namespace voi
