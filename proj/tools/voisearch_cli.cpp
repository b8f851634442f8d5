// Command-line front end over the voisearch C API.
//
//   voisearch bandit --arms 32 --budgets 32:1024:x2 --trials 10000 --policies ucb1,voi --out r.csv
//   voisearch match --game connect4-5x5 --samples-per-ply 256:2048:x2 --games 1000 --out m.csv
//   voisearch oracle-check --arms 2 --budget 8 --policy voi --trials 100000

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "budget_list.hpp"
#include "voisearch/voisearch.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(vs_status st) {
  if (st == VS_OK) return;
  const std::string msg = vs_last_error();
  if (st == VS_ERR_CONFIG || st == VS_ERR_INVALID_ARGUMENT || st == VS_ERR_LIMIT) throw UsageFailure(msg);
  throw RuntimeFailure(msg);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

std::vector<std::uint64_t> budgets_or_usage(const std::string& text) {
  try {
    return voisearch_cli::parse_budgets(text);
  } catch (const std::invalid_argument& e) {
    throw UsageFailure(e.what());
  }
}

vs_voi_variant parse_variant(const std::string& text) { return text == "phi" ? VS_VOI_PHI : VS_VOI_CONST; }

template <class Handle, class ToCsv, class WriteCsv, class WriteSvg>
void emit(const Handle* h, const std::string& out, const std::string& plot, ToCsv to_csv, WriteCsv write_csv,
          WriteSvg write_svg) {
  if (out.empty()) {
    std::size_t length = 0;
    check(to_csv(h, nullptr, 0, &length));
    std::string text(length + 1, '\0');
    check(to_csv(h, text.data(), text.size(), &length));
    text.resize(length);
    std::cout << text;
  } else {
    check(write_csv(h, out.c_str()));
  }
  if (!plot.empty()) check(write_svg(h, plot.c_str()));
}

struct Shared {
  std::uint64_t seed = vs_default_seed();
  std::string out;
  std::string plot;
  std::uint32_t threads = 1;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--seed", s.seed, "master RNG seed")->capture_default_str();
  cmd->add_option("--out", s.out, "CSV output path (stdout when omitted)");
  cmd->add_option("--plot", s.plot, "SVG chart output path");
  cmd->add_option("--threads", s.threads, "worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct BanditArgs {
  std::uint32_t arms = 32;
  std::string budgets = "32:1024:x2";
  std::uint64_t trials = 10000;
  std::string policies = "ucb1,voi";
  std::string variant = "const";
  double ucb_c = 1.0;
};

void run_bandit(const BanditArgs& a, const Shared& s) {
  static const std::map<std::string, vs_policy> kPolicies = {
      {"uniform", VS_POLICY_UNIFORM}, {"ucb1", VS_POLICY_UCB1}, {"voi", VS_POLICY_VOI}};
  const auto budgets = budgets_or_usage(a.budgets);

  vs_bandit_config* cfg = nullptr;
  check(vs_bandit_config_create(&cfg));
  std::unique_ptr<vs_bandit_config, decltype(&vs_bandit_config_destroy)> cfg_guard(cfg, vs_bandit_config_destroy);
  check(vs_bandit_config_set_arms(cfg, a.arms));
  check(vs_bandit_config_set_budgets(cfg, budgets.data(), budgets.size()));
  check(vs_bandit_config_set_trials(cfg, a.trials));
  for (const std::string& p : split(a.policies)) {
    auto it = kPolicies.find(p);
    if (it == kPolicies.end()) throw UsageFailure("unknown policy '" + p + "'");
    check(vs_bandit_config_add_policy(cfg, it->second));
  }
  check(vs_bandit_config_set_voi_variant(cfg, parse_variant(a.variant)));
  check(vs_bandit_config_set_ucb_c(cfg, a.ucb_c));
  check(vs_bandit_config_set_seed(cfg, s.seed));
  check(vs_bandit_config_set_threads(cfg, s.threads));

  vs_result_table* table = nullptr;
  check(vs_run_bandit(cfg, &table));
  std::unique_ptr<vs_result_table, decltype(&vs_result_table_destroy)> guard(table, vs_result_table_destroy);
  emit(table, s.out, s.plot, vs_result_table_to_csv, vs_result_table_write_csv, vs_result_table_write_svg);
}

struct MatchArgs {
  std::string game = "connect4-5x5";
  std::string budgets = "256:2048:x2";
  std::uint64_t games = 1000;
  double uct_c = 1.4142135623730951;
  std::string variant = "const";
  std::string engines = "voi,uct";
};

void run_match(const MatchArgs& a, const Shared& s) {
  const auto budgets = budgets_or_usage(a.budgets);
  const auto engines = split(a.engines);
  if (engines.size() != 2) throw UsageFailure("--engines takes two comma-separated engines");
  auto engine = [](const std::string& e) {
    if (e == "uct") return VS_ENGINE_UCT;
    if (e == "voi") return VS_ENGINE_VOI;
    throw UsageFailure("unknown engine '" + e + "'");
  };

  vs_match_config* cfg = nullptr;
  check(vs_match_config_create(&cfg));
  std::unique_ptr<vs_match_config, decltype(&vs_match_config_destroy)> cfg_guard(cfg, vs_match_config_destroy);
  check(vs_match_config_set_game(cfg, a.game.c_str()));
  check(vs_match_config_set_engines(cfg, engine(engines[0]), engine(engines[1])));
  check(vs_match_config_set_budgets(cfg, budgets.data(), budgets.size()));
  check(vs_match_config_set_games(cfg, a.games));
  check(vs_match_config_set_uct_c(cfg, a.uct_c));
  check(vs_match_config_set_voi_variant(cfg, parse_variant(a.variant)));
  check(vs_match_config_set_seed(cfg, s.seed));
  check(vs_match_config_set_threads(cfg, s.threads));

  vs_match_report* report = nullptr;
  check(vs_run_match(cfg, &report));
  std::unique_ptr<vs_match_report, decltype(&vs_match_report_destroy)> guard(report, vs_match_report_destroy);
  emit(report, s.out, s.plot, vs_match_report_to_csv, vs_match_report_write_csv, vs_match_report_write_svg);
}

struct OracleArgs {
  std::uint32_t arms = 2;
  std::uint64_t budget = 8;
  std::string policy = "voi";
  std::uint64_t trials = 100000;
  std::string variant = "const";
  double ucb_c = 1.0;
};

int run_oracle(const OracleArgs& a, const Shared& s) {
  vs_policy policy = VS_POLICY_VOI;
  if (a.policy == "uniform") {
    policy = VS_POLICY_UNIFORM;
  } else if (a.policy == "ucb1") {
    policy = VS_POLICY_UCB1;
  } else if (a.policy != "voi") {
    throw UsageFailure("unknown policy '" + a.policy + "'");
  }
  vs_oracle_result r{};
  check(vs_oracle_check(a.arms, a.budget, policy, parse_variant(a.variant), a.ucb_c, a.trials, s.seed, s.threads, &r));

  std::ostringstream text;
  text.precision(17);
  text << "means=";
  for (std::uint32_t i = 0; i < r.arms; ++i) text << (i ? "," : "") << r.means[i];
  text << "\noracle=" << r.oracle_regret << "\nmonte_carlo=" << r.mc_regret << "\nstderr=" << r.mc_stderr
       << "\ntrials=" << r.trials << "\n"
       << (r.pass ? "PASS" : "FAIL") << "\n";
  if (s.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream file(s.out);
    file << text.str();
    if (!file) throw RuntimeFailure("cannot write " + s.out);
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VOI-aware Monte-Carlo sampling experiments"};
  app.require_subcommand(1);

  Shared bandit_shared, match_shared, oracle_shared;
  BanditArgs bandit;
  MatchArgs match;
  OracleArgs oracle;

  auto* b = app.add_subcommand("bandit", "simple regret of sampling policies on random Bernoulli bandits");
  b->add_option("--arms", bandit.arms, "arms per instance")->check(CLI::Range(2u, 1u << 20))->capture_default_str();
  b->add_option("--budgets", bandit.budgets, "budget list or start:end:x<factor> sweep")->capture_default_str();
  b->add_option("--trials", bandit.trials, "random instances per point")->check(CLI::PositiveNumber)->capture_default_str();
  b->add_option("--policies", bandit.policies, "comma list of uniform|ucb1|voi")->capture_default_str();
  b->add_option("--voi-variant", bandit.variant, "exponent factor: const (1.37) or phi")
      ->check(CLI::IsMember({"const", "phi"}))
      ->capture_default_str();
  b->add_option("--ucb-c", bandit.ucb_c, "UCB1 exploration scale")->check(CLI::PositiveNumber)->capture_default_str();
  add_shared(b, bandit_shared);

  auto* m = app.add_subcommand("match", "VOI-at-root engine against UCT at equal samples per ply");
  m->add_option("--game", match.game, "ptree:<b>,<d>,<p> or connect4-5x5")->capture_default_str();
  m->add_option("--samples-per-ply", match.budgets, "budget list or start:end:x<factor> sweep")->capture_default_str();
  m->add_option("--games", match.games, "games per budget")->check(CLI::PositiveNumber)->capture_default_str();
  m->add_option("--uct-c", match.uct_c, "UCB1 exploration constant used in the trees")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  m->add_option("--voi-variant", match.variant, "const or phi")->check(CLI::IsMember({"const", "phi"}))->capture_default_str();
  m->add_option("--engines", match.engines, "engine A,engine B from uct|voi")->capture_default_str();
  add_shared(m, match_shared);

  auto* o = app.add_subcommand("oracle-check", "Monte-Carlo regret against exact enumeration on one random instance");
  o->add_option("--arms", oracle.arms, "arms (2..8)")->check(CLI::Range(2u, 8u))->capture_default_str();
  o->add_option("--budget", oracle.budget, "pull budget (<= 20)")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{20}))->capture_default_str();
  o->add_option("--policy", oracle.policy, "uniform|ucb1|voi")->check(CLI::IsMember({"uniform", "ucb1", "voi"}))->capture_default_str();
  o->add_option("--trials", oracle.trials, "Monte-Carlo trials")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))->capture_default_str();
  o->add_option("--voi-variant", oracle.variant, "const or phi")->check(CLI::IsMember({"const", "phi"}))->capture_default_str();
  o->add_option("--ucb-c", oracle.ucb_c, "UCB1 exploration scale")->check(CLI::PositiveNumber)->capture_default_str();
  add_shared(o, oracle_shared);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (b->parsed()) run_bandit(bandit, bandit_shared);
    if (m->parsed()) run_match(match, match_shared);
    if (o->parsed()) return run_oracle(oracle, oracle_shared);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
