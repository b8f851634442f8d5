#include "voi/policies.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "voi/errors.hpp"

namespace voi {
namespace {

// Builds stats whose arm i has exactly pulls[i] pulls and mean means[i]
// (means must be representable as k / pulls[i]).
ArmStats make_stats(const std::vector<double>& means, const std::vector<std::uint64_t>& pulls) {
  ArmStats s(means.size());
  for (std::size_t i = 0; i < means.size(); ++i) {
    const auto ones = static_cast<std::uint64_t>(std::llround(means[i] * static_cast<double>(pulls[i])));
    for (std::uint64_t j = 0; j < pulls[i]; ++j) s.record(i, j < ones ? 1.0 : 0.0);
  }
  return s;
}

TEST(PhiTest, EndpointsAreTwo) {
  for (std::uint64_t n : {1u, 7u, 100u, 1000000u}) {
    EXPECT_EQ(phi(0, n), 2.0);
    EXPECT_EQ(phi(n, n), 2.0);
  }
  EXPECT_THROW(phi(3, 0), PreconditionError);
}

TEST(PhiTest, MinimumMatchesGoldenSectionOracle) {
  // Independent route: golden-section search on g(t) = 2((1+t^2)/(1+t))^2, t = sqrt(n/N).
  auto g = [](double t) { return 2.0 * std::pow((1.0 + t * t) / (1.0 + t), 2); };
  double lo = 0.0, hi = 1.0;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double a = hi - r * (hi - lo);
    const double b = lo + r * (hi - lo);
    if (g(a) < g(b)) {
      hi = b;
    } else {
      lo = a;
    }
  }
  const double t_star = (lo + hi) / 2.0;
  EXPECT_NEAR(g(t_star), 24.0 - 16.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(t_star * t_star, std::pow(std::sqrt(2.0) - 1.0, 2), 1e-6);

  // phi at the grid point nearest the optimum ratio.
  const std::uint64_t big = 1000000;
  const auto n = static_cast<std::uint64_t>(std::llround(t_star * t_star * big));
  EXPECT_NEAR(phi(n, big), 24.0 - 16.0 * std::sqrt(2.0), 1e-9);
}

TEST(PhiTest, AlwaysAboveLowerBound) {
  for (std::uint64_t big : {1u, 2u, 3u, 10u, 97u, 1000u}) {
    for (std::uint64_t n = 0; n <= 3 * big; ++n) EXPECT_GT(phi(n, big), kPhiLowerBound) << n << "/" << big;
  }
}

TEST(ProbBoundTest, Examples) {
  ArmStats s = make_stats({0.6, 0.5}, {100, 100});
  EXPECT_NEAR(prob_bound(s, 0, 0, 1, 100, VoiVariant::constant_137), 0.50821391910560050, 1e-12);
  EXPECT_NEAR(prob_bound(s, 0, 0, 1, 100, VoiVariant::exact_phi), 0.27067056647322540, 1e-12);

  ArmStats tied = make_stats({0.5, 0.5}, {10, 40});
  EXPECT_DOUBLE_EQ(prob_bound(tied, 0, 0, 1, 9, VoiVariant::constant_137), 2.0);
  EXPECT_DOUBLE_EQ(prob_bound(tied, 1, 0, 1, 9, VoiVariant::exact_phi), 2.0);
}

TEST(ProbBoundTest, UnvisitedArmIsPrecondition) {
  ArmStats s(3);
  s.record(0, 1.0);
  s.record(1, 0.0);
  EXPECT_THROW(prob_bound(s, 2, 0, 1, 5, VoiVariant::constant_137), PreconditionError);
}

TEST(VoiUpperBoundTest, CorollaryPointValues) {
  ArmStats s = make_stats({0.6, 0.5}, {100, 100});
  EXPECT_NEAR(voi_upper_bound(s, 0, 0, 1, 100, VoiVariant::constant_137), 0.25410695955280027, 1e-12);

  ArmStats c = make_stats({0.6, 0.5, 0.4}, {100, 100, 50});
  EXPECT_NEAR(voi_upper_bound(c, 2, 0, 1, 100, VoiVariant::constant_137), 0.10331255502906955, 1e-12);

  ArmStats tied = make_stats({0.5, 0.5}, {20, 20});
  EXPECT_NEAR(voi_upper_bound(tied, 0, 0, 1, 7, VoiVariant::constant_137), 2.0 * 7 * 0.5 / 20, 1e-12);
}

TEST(VoiUpperBoundTest, PreconditionsAndTightFactor) {
  ArmStats s = make_stats({0.6, 0.5}, {100, 100});
  EXPECT_THROW(voi_upper_bound(s, 0, 0, 1, 0, VoiVariant::constant_137), PreconditionError);
  EXPECT_THROW(voi_upper_bound(ArmStats(2), 0, 0, 1, 3, VoiVariant::constant_137), PreconditionError);
  // N/(N+n) replaces N/n: here N = n so the tight bound is half the loose one.
  EXPECT_NEAR(voi_tight_bound(s, 0, 0, 1, 100, VoiVariant::constant_137),
              0.5 * voi_upper_bound(s, 0, 0, 1, 100, VoiVariant::constant_137), 1e-15);
}

TEST(VoiUpperBoundTest, StrictlyDecreasingInPulls) {
  // alpha branch and a challenger, with means fixed and n varied.
  for (std::uint64_t n = 4; n < 400; n += 4) {
    ArmStats a = make_stats({0.75, 0.5}, {n, 8});
    ArmStats b = make_stats({0.75, 0.5}, {n + 4, 8});
    EXPECT_GT(voi_upper_bound(a, 0, 0, 1, 50, VoiVariant::constant_137),
              voi_upper_bound(b, 0, 0, 1, 50, VoiVariant::constant_137));
    ArmStats c = make_stats({0.75, 0.5}, {8, n});
    ArmStats d = make_stats({0.75, 0.5}, {8, n + 4});
    EXPECT_GT(voi_upper_bound(c, 1, 0, 1, 50, VoiVariant::exact_phi),
              voi_upper_bound(d, 1, 0, 1, 50, VoiVariant::exact_phi));
  }
  // Zero gap keeps the a/n shape.
  ArmStats e = make_stats({0.5, 0.5}, {4, 4});
  ArmStats f = make_stats({0.5, 0.5}, {4, 8});
  EXPECT_GT(voi_upper_bound(e, 1, 0, 1, 50, VoiVariant::constant_137),
            voi_upper_bound(f, 1, 0, 1, 50, VoiVariant::constant_137));
}

TEST(VoiUpperBoundTest, ChallengerNonIncreasingAsItFallsBehind) {
  double previous = INFINITY;
  for (int ones = 12; ones >= 0; --ones) {  // arm 2 stays a challenger
    ArmStats s = make_stats({0.75, 0.75, ones / 16.0}, {16, 16, 16});
    const double v = voi_upper_bound(s, 2, 0, 1, 64, VoiVariant::constant_137);
    EXPECT_LE(v, previous);
    previous = v;
  }
}

TEST(VoiUpperBoundTest, ExactPhiNeverExceedsConstant) {
  Rng rng(11);
  for (int t = 0; t < 20000; ++t) {
    const std::size_t k = 2 + rng.below(6);
    ArmStats s(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t n = 1 + rng.below(60);
      for (std::uint64_t j = 0; j < n; ++j) s.record(i, rng.uniform() < 0.5 ? 1.0 : 0.0);
    }
    const std::uint64_t remaining = 1 + rng.below(200);
    const BestTwo b = empirical_best_two(s);
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_LE(voi_upper_bound(s, i, b.alpha, b.beta, remaining, VoiVariant::exact_phi),
                voi_upper_bound(s, i, b.alpha, b.beta, remaining, VoiVariant::constant_137));
    }
  }
}

TEST(VoiEstimatesTest, ExactlyOneAlphaAndDiagnosticFlag) {
  ArmStats s = make_stats({0.5, 0.5, 0.25}, {4, 4, 4});
  VoiEstimate est = voi_estimates(s, 10, VoiVariant::constant_137);
  int alphas = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_GE(est.lambda_hat[i], 0.0);
    alphas += est.role(i) == VoiRole::alpha;
  }
  EXPECT_EQ(alphas, 1);
  EXPECT_TRUE(est.prob_bound_above_one);  // zero gap gives a bound of 2

  ArmStats far = make_stats({1.0, 0.0}, {200, 200});
  EXPECT_FALSE(voi_estimates(far, 10, VoiVariant::constant_137).prob_bound_above_one);
}

TEST(VoiSelectTest, Examples) {
  ArmStats s(3);
  s.record(0, 1.0);
  s.record(1, 0.0);
  EXPECT_EQ(voi_select(s, {10, 2}, VoiVariant::constant_137), 2u);

  ArmStats two = make_stats({0.6, 0.5}, {100, 10});
  EXPECT_NEAR(voi_upper_bound(two, 1, 0, 1, 100, VoiVariant::constant_137), 6.975761809056875, 1e-9);
  EXPECT_EQ(voi_select(two, {210, 110}, VoiVariant::constant_137), 1u);

  ArmStats same = make_stats({0.5, 0.5, 0.5}, {6, 6, 6});
  EXPECT_EQ(voi_select(same, {30, 18}, VoiVariant::constant_137), 0u);

  EXPECT_THROW(voi_select(same, {18, 18}, VoiVariant::constant_137), PreconditionError);
}

TEST(VoiSelectTest, MatchesArgmaxOfEstimatesAndIsScaleFree) {
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t k = 2 + rng.below(8);
    ArmStats s(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t n = 1 + rng.below(30);
      for (std::uint64_t j = 0; j < n; ++j) s.record(i, rng.uniform() < 0.6 ? 1.0 : 0.0);
    }
    const BudgetState budget{s.total_pulls() + 1 + rng.below(100), s.total_pulls()};
    const VoiVariant v = t % 2 ? VoiVariant::exact_phi : VoiVariant::constant_137;
    const std::size_t chosen = voi_select(s, budget, v);
    ASSERT_EQ(chosen, voi_select(s, budget, v));

    const VoiEstimate est = voi_estimates(s, budget.remaining(), v);
    for (double scale : {1.0, 0.001, 37.0}) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < k; ++i) {
        if (scale * est.lambda_hat[i] > scale * est.lambda_hat[best]) best = i;
      }
      ASSERT_EQ(best, chosen);
    }
  }
}

TEST(Ucb1SelectTest, Examples) {
  ArmStats s(2);
  s.record(0, 1.0);
  EXPECT_EQ(ucb1_select(s, 1, 1.0), 1u);

  EXPECT_EQ(ucb1_select(make_stats({1.0, 0.0}, {1, 1}), 2, 1.0), 0u);
  EXPECT_EQ(ucb1_select(make_stats({0.5, 0.4}, {100, 5}), 105, 1.0), 1u);

  // n = (100, 1): arm 1 has mean 0.4 only as a fraction; build it directly.
  ArmStats direct(2);
  for (int i = 0; i < 100; ++i) direct.record(0, i < 50 ? 1.0 : 0.0);
  direct.record(1, 0.4);
  EXPECT_EQ(ucb1_select(direct, 101, 1.0), 1u);
}

TEST(Ucb1SelectTest, NeverSkipsAnUnvisitedArm) {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 2 + rng.below(6);
    ArmStats s(k);
    std::size_t first_gap = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (rng.uniform() < 0.3) {
        if (first_gap == k) first_gap = i;
        continue;
      }
      s.record(i, rng.uniform());
    }
    const std::size_t chosen = ucb1_select(s, s.total_pulls(), 1.0);
    if (first_gap < k) {
      ASSERT_EQ(chosen, first_gap);
    } else {
      ASSERT_TRUE(s.visited(chosen));
    }
  }
}

TEST(UniformSelectTest, RoundRobin) {
  ArmStats s(32);
  EXPECT_EQ(uniform_select(s, 0), 0u);
  EXPECT_EQ(uniform_select(s, 33), 1u);
  EXPECT_EQ(uniform_select(s, 31), 31u);
}

TEST(PolicyKindTest, NamesAndStreamKeysAreDistinct) {
  std::vector<PolicyKind> kinds = {PolicyKind::uniform(), PolicyKind::ucb1(), PolicyKind::voi(),
                                   PolicyKind::voi(VoiVariant::exact_phi)};
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    for (std::size_t j = i + 1; j < kinds.size(); ++j) {
      EXPECT_NE(kinds[i].name(), kinds[j].name());
      EXPECT_NE(kinds[i].stream_key(), kinds[j].stream_key());
    }
  }
}

}  // namespace
}  // namespace voi
