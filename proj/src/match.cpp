#include "voi/match.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "voi/errors.hpp"
#include "voi/parallel.hpp"

namespace voi {

namespace {

constexpr std::uint64_t kGameStream = 3;
constexpr std::uint64_t kSearchStream = 4;

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError(fmt::format("invalid {} '{}'", what, text));
  return value;
}

template <GameState S>
double play_out(S state, const EngineConfig& a, const EngineConfig& b, bool a_first, std::uint64_t budget,
                std::uint64_t pair, std::uint64_t seed) {
  std::uint64_t ply = 0;
  while (!state.is_terminal()) {
    const bool a_to_move = (state.to_move() == 1) == a_first;
    Rng rng(derive_seed(seed, {kSearchStream, budget, pair, ply}));
    state.apply(engine_move(a_to_move ? a : b, state, budget, rng));
    ++ply;
  }
  const double v1 = state.value();
  return a_first ? v1 : 1.0 - v1;
}

}  // namespace

std::string EngineConfig::name() const {
  if (kind == EngineKind::uct) return "uct";
  return variant == VoiVariant::exact_phi ? "voi-phi" : "voi";
}

GameSpec parse_game_spec(std::string_view text) {
  if (text == "connect4-5x5") return Connect4Spec{};
  constexpr std::string_view kPrefix = "ptree:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view rest = text.substr(kPrefix.size());
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw ConfigError("ptree spec must be ptree:<b>,<d>,<p>");
    PTreeSpec spec;
    spec.branching = parse_number<int>(rest.substr(0, c1), "ptree branching");
    spec.depth = parse_number<int>(rest.substr(c1 + 1, c2 - c1 - 1), "ptree depth");
    spec.win_prob = parse_number<double>(rest.substr(c2 + 1), "ptree win probability");
    if (spec.branching < 2 || spec.branching > 64) throw ConfigError("ptree branching must lie in [2, 64]");
    if (spec.depth < 1 || spec.depth > 64) throw ConfigError("ptree depth must lie in [1, 64]");
    if (!(spec.win_prob >= 0.0 && spec.win_prob <= 1.0)) throw ConfigError("ptree win probability must lie in [0, 1]");
    return spec;
  }
  throw ConfigError(fmt::format("unknown game '{}'", text));
}

std::string to_string(const GameSpec& spec) {
  if (const auto* p = std::get_if<PTreeSpec>(&spec)) {
    return fmt::format("ptree:{},{},{:.17g}", p->branching, p->depth, p->win_prob);
  }
  return "connect4-5x5";
}

Interval wilson_interval(double successes, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = successes / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

void MatchConfig::validate() const {
  if (budgets.empty()) throw ConfigError("at least one samples-per-ply budget is required");
  for (auto b : budgets) {
    if (b < 1) throw ConfigError("samples per ply must be positive");
  }
  if (games < 1) throw ConfigError("games must be at least 1");
  if (!(a.c >= 0.0) || !(b.c >= 0.0)) throw ConfigError("exploration constant must be non-negative");
  if (const auto* p = std::get_if<PTreeSpec>(&game)) {
    for (auto b : budgets) {
      if (b < static_cast<std::uint64_t>(p->branching)) throw ConfigError("samples per ply below branching factor");
    }
  } else {
    for (auto b : budgets) {
      if (b < static_cast<std::uint64_t>(Connect4Game::kCols)) throw ConfigError("samples per ply below move count");
    }
  }
}

double play_game(const EngineConfig& a, const EngineConfig& b, const GameSpec& game, std::uint64_t samples_per_ply,
                 std::uint64_t game_index, std::uint64_t seed) {
  const std::uint64_t pair = game_index / 2;
  const bool a_first = game_index % 2 == 0;
  if (const auto* p = std::get_if<PTreeSpec>(&game)) {
    PTreeGame root(p->branching, p->depth, p->win_prob, derive_seed(seed, {kGameStream, pair}));
    return play_out(root, a, b, a_first, samples_per_ply, pair, seed);
  }
  return play_out(Connect4Game{}, a, b, a_first, samples_per_ply, pair, seed);
}

MatchResult play_match(const EngineConfig& a, const EngineConfig& b, const GameSpec& game,
                       std::uint64_t samples_per_ply, std::uint64_t games, std::uint64_t seed, unsigned threads) {
  std::vector<double> scores(games);
  parallel_for(games, threads, [&](std::size_t g) { scores[g] = play_game(a, b, game, samples_per_ply, g, seed); });

  MatchResult r;
  r.budget = samples_per_ply;
  r.games = games;
  for (double s : scores) {
    if (s == 1.0) {
      ++r.a_wins;
    } else if (s == 0.0) {
      ++r.b_wins;
    } else {
      ++r.draws;
    }
  }
  const double points = static_cast<double>(r.a_wins) + 0.5 * static_cast<double>(r.draws);
  r.a_winrate = points / static_cast<double>(games);
  r.ci = wilson_interval(points, games);
  return r;
}

MatchReport run_match(const MatchConfig& config) {
  config.validate();
  MatchReport report;
  for (auto budget : config.budgets) {
    report.rows.push_back(play_match(config.a, config.b, config.game, budget, config.games, config.seed, config.threads));
  }
  return report;
}

void write_csv(std::ostream& out, const MatchReport& report, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) fmt::print(out, "# {}\n", c);
  out << "budget,games,voi_wins,uct_wins,draws,voi_winrate,ci_low,ci_high\n";
  for (const MatchResult& r : report.rows) {
    fmt::print(out, "{},{},{},{},{},{:.17g},{:.17g},{:.17g}\n", r.budget, r.games, r.a_wins, r.b_wins, r.draws,
               r.a_winrate, r.ci.low, r.ci.high);
  }
}

std::vector<std::string> describe(const MatchConfig& config) {
  std::vector<std::string> budgets;
  for (auto b : config.budgets) budgets.push_back(std::to_string(b));
  return {
      "subcommand=match",
      fmt::format("game={}", to_string(config.game)),
      fmt::format("engine_a={}(c={:.17g})", config.a.name(), config.a.c),
      fmt::format("engine_b={}(c={:.17g})", config.b.name(), config.b.c),
      fmt::format("samples_per_ply={}", fmt::join(budgets, ",")),
      fmt::format("games={}", config.games),
      fmt::format("seed={}", config.seed),
  };
}

}  // namespace voi
