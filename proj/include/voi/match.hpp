#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "voi/mcts.hpp"
#include "voi/policies.hpp"

namespace voi {

enum class EngineKind { uct, voi };

struct EngineConfig {
  EngineKind kind = EngineKind::uct;
  double c = kDefaultUctC;
  VoiVariant variant = VoiVariant::constant_137;  // voi engine only

  std::string name() const;
};

struct PTreeSpec {
  int branching = 4;
  int depth = 8;
  double win_prob = 0.5;
};

struct Connect4Spec {};

using GameSpec = std::variant<PTreeSpec, Connect4Spec>;

/// Parses "ptree:<b>,<d>,<p>" or "connect4-5x5". Throws ConfigError.
GameSpec parse_game_spec(std::string_view text);
std::string to_string(const GameSpec& spec);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `successes` out of `n` (successes may be
/// fractional when draws count one half).
Interval wilson_interval(double successes, std::uint64_t n, double z = 1.959963984540054);

/// Tallies for engine A against engine B at one samples-per-ply budget.
struct MatchResult {
  std::uint64_t budget = 0;
  std::uint64_t games = 0;
  std::uint64_t a_wins = 0;
  std::uint64_t b_wins = 0;
  std::uint64_t draws = 0;
  double a_winrate = 0.0;  // draws count one half
  Interval ci;
};

struct MatchConfig {
  EngineConfig a{EngineKind::voi};
  EngineConfig b{EngineKind::uct};
  GameSpec game = Connect4Spec{};
  std::vector<std::uint64_t> budgets;
  std::uint64_t games = 1000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;  // never affects results

  void validate() const;
};

struct MatchReport {
  std::vector<MatchResult> rows;
};

/// Move chosen by `engine` from `state` with `budget` rollouts.
template <GameState S>
Move engine_move(const EngineConfig& engine, const S& state, std::uint64_t budget, Rng& rng) {
  if (engine.kind == EngineKind::voi) return voi_root_search(state, budget, engine.c, rng, engine.variant);
  return uct_search(state, budget, engine.c, rng);
}

/// Score (1, 0.5 or 0) for engine A in game `game_index`. Games come in
/// pairs on the same game instance with colors swapped; A plays first in even
/// games. Search streams are keyed by (pair, ply), so two identical engines
/// replay the same game in both halves of a pair.
double play_game(const EngineConfig& a, const EngineConfig& b, const GameSpec& game, std::uint64_t samples_per_ply,
                 std::uint64_t game_index, std::uint64_t seed);

/// Plays `games` games with equal samples-per-ply for both engines.
MatchResult play_match(const EngineConfig& a, const EngineConfig& b, const GameSpec& game,
                       std::uint64_t samples_per_ply, std::uint64_t games, std::uint64_t seed, unsigned threads = 1);

/// One play_match per configured budget.
MatchReport run_match(const MatchConfig& config);

/// CSV with header budget,games,voi_wins,uct_wins,draws,voi_winrate,ci_low,ci_high
/// (engine A in the voi_* columns).
void write_csv(std::ostream& out, const MatchReport& report, const std::vector<std::string>& comments = {});

std::vector<std::string> describe(const MatchConfig& config);

}  // namespace voi
