#include "voisearch/voisearch.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "voi/errors.hpp"
#include "voi/match.hpp"
#include "voi/plot.hpp"
#include "voi/regret_harness.hpp"

struct vs_bandit_config {
  voi::ExperimentConfig config;
  voi::VoiVariant variant = voi::VoiVariant::constant_137;
  double ucb_c = 1.0;
  std::vector<vs_policy> policies;
};

struct vs_result_table {
  voi::ResultTable table;
  std::vector<std::string> comments;
};

struct vs_match_config {
  voi::MatchConfig config;
};

struct vs_match_report {
  voi::MatchReport report;
  std::vector<std::string> comments;
};

namespace {

thread_local std::string g_last_error;

vs_status fail(vs_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Maps the library's exception hierarchy onto status codes.
template <class F>
vs_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return VS_OK;
  } catch (const voi::ConfigError& e) {
    return fail(VS_ERR_CONFIG, e.what());
  } catch (const voi::UsageError& e) {
    return fail(VS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const voi::PreconditionError& e) {
    return fail(VS_ERR_PRECONDITION, e.what());
  } catch (const voi::LimitError& e) {
    return fail(VS_ERR_LIMIT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(VS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(VS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VS_ERR_INTERNAL, "unknown error");
  }
}

#define VS_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(VS_ERR_INVALID_ARGUMENT, #ptr " is null")

voi::VoiVariant to_variant(vs_voi_variant v) {
  switch (v) {
    case VS_VOI_CONST:
      return voi::VoiVariant::constant_137;
    case VS_VOI_PHI:
      return voi::VoiVariant::exact_phi;
  }
  throw voi::UsageError("unknown VOI variant");
}

voi::PolicyKind to_policy(vs_policy p, voi::VoiVariant variant, double ucb_c) {
  switch (p) {
    case VS_POLICY_UNIFORM:
      return voi::PolicyKind::uniform();
    case VS_POLICY_UCB1:
      return voi::PolicyKind::ucb1(ucb_c);
    case VS_POLICY_VOI:
      return voi::PolicyKind::voi(variant);
  }
  throw voi::UsageError("unknown policy");
}

voi::EngineKind to_engine(vs_engine e) {
  switch (e) {
    case VS_ENGINE_UCT:
      return voi::EngineKind::uct;
    case VS_ENGINE_VOI:
      return voi::EngineKind::voi;
  }
  throw voi::UsageError("unknown engine");
}

void write_text(const char* path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure(std::string("cannot open ") + path + " for writing");
  file << text;
  if (!file) throw std::ios_base::failure(std::string("failed writing ") + path);
}

vs_status copy_out(const std::string& text, char* buffer, size_t capacity, size_t* length) {
  VS_REQUIRE(length);
  *length = text.size();
  if (buffer != nullptr && capacity > 0) {
    const size_t n = std::min(capacity - 1, text.size());
    std::memcpy(buffer, text.data(), n);
    buffer[n] = '\0';
  }
  return VS_OK;
}

std::string csv_text(const vs_result_table& table) {
  std::ostringstream text;
  voi::write_csv(text, table.table, table.comments);
  return text.str();
}

std::string csv_text(const vs_match_report& report) {
  std::ostringstream text;
  voi::write_csv(text, report.report, report.comments);
  return text.str();
}

}  // namespace

extern "C" {

const char* vs_version(void) { return "1.0.0"; }

const char* vs_last_error(void) { return g_last_error.c_str(); }

uint64_t vs_default_seed(void) { return voi::kDefaultSeed; }

vs_status vs_bandit_config_create(vs_bandit_config** out) {
  VS_REQUIRE(out);
  return guarded([&] { *out = new vs_bandit_config(); });
}

void vs_bandit_config_destroy(vs_bandit_config* cfg) { delete cfg; }

vs_status vs_bandit_config_set_arms(vs_bandit_config* cfg, uint32_t arms) {
  VS_REQUIRE(cfg);
  if (arms < 2) return fail(VS_ERR_INVALID_ARGUMENT, "arm count must be at least 2");
  cfg->config.arms = arms;
  return VS_OK;
}

vs_status vs_bandit_config_set_budgets(vs_bandit_config* cfg, const uint64_t* budgets, size_t count) {
  VS_REQUIRE(cfg);
  if (count > 0) VS_REQUIRE(budgets);
  cfg->config.budgets.assign(budgets, budgets + count);
  return VS_OK;
}

vs_status vs_bandit_config_set_trials(vs_bandit_config* cfg, uint64_t trials) {
  VS_REQUIRE(cfg);
  if (trials < 1) return fail(VS_ERR_INVALID_ARGUMENT, "trials must be at least 1");
  cfg->config.trials = trials;
  return VS_OK;
}

vs_status vs_bandit_config_add_policy(vs_bandit_config* cfg, vs_policy policy) {
  VS_REQUIRE(cfg);
  if (policy != VS_POLICY_UNIFORM && policy != VS_POLICY_UCB1 && policy != VS_POLICY_VOI) {
    return fail(VS_ERR_INVALID_ARGUMENT, "unknown policy");
  }
  cfg->policies.push_back(policy);
  return VS_OK;
}

vs_status vs_bandit_config_set_voi_variant(vs_bandit_config* cfg, vs_voi_variant variant) {
  VS_REQUIRE(cfg);
  return guarded([&] { cfg->variant = to_variant(variant); });
}

vs_status vs_bandit_config_set_ucb_c(vs_bandit_config* cfg, double c) {
  VS_REQUIRE(cfg);
  if (!(c > 0.0) || !std::isfinite(c)) return fail(VS_ERR_INVALID_ARGUMENT, "UCB1 scale must be positive");
  cfg->ucb_c = c;
  return VS_OK;
}

vs_status vs_bandit_config_set_seed(vs_bandit_config* cfg, uint64_t seed) {
  VS_REQUIRE(cfg);
  cfg->config.seed = seed;
  return VS_OK;
}

vs_status vs_bandit_config_set_threads(vs_bandit_config* cfg, uint32_t threads) {
  VS_REQUIRE(cfg);
  if (threads < 1) return fail(VS_ERR_INVALID_ARGUMENT, "threads must be at least 1");
  cfg->config.threads = threads;
  return VS_OK;
}

vs_status vs_run_bandit(const vs_bandit_config* cfg, vs_result_table** out) {
  VS_REQUIRE(cfg);
  VS_REQUIRE(out);
  return guarded([&] {
    voi::ExperimentConfig config = cfg->config;
    config.policies.clear();
    for (vs_policy p : cfg->policies) config.policies.push_back(to_policy(p, cfg->variant, cfg->ucb_c));
    auto table = std::make_unique<vs_result_table>();
    table->table = voi::run_experiment(config);
    table->comments = voi::describe(config);
    *out = table.release();
  });
}

void vs_result_table_destroy(vs_result_table* table) { delete table; }

size_t vs_result_table_size(const vs_result_table* table) { return table ? table->table.rows.size() : 0; }

vs_status vs_result_table_row(const vs_result_table* table, size_t index, vs_result_row* out) {
  VS_REQUIRE(table);
  VS_REQUIRE(out);
  if (index >= table->table.rows.size()) return fail(VS_ERR_INVALID_ARGUMENT, "row index out of range");
  const voi::ResultRow& r = table->table.rows[index];
  *out = {r.policy.c_str(), r.budget, r.mean_regret, r.stderr_regret, r.trials};
  return VS_OK;
}

vs_status vs_result_table_write_csv(const vs_result_table* table, const char* path) {
  VS_REQUIRE(table);
  VS_REQUIRE(path);
  return guarded([&] { write_text(path, csv_text(*table)); });
}

vs_status vs_result_table_to_csv(const vs_result_table* table, char* buffer, size_t capacity, size_t* length) {
  VS_REQUIRE(table);
  std::string text;
  const vs_status st = guarded([&] { text = csv_text(*table); });
  return st == VS_OK ? copy_out(text, buffer, capacity, length) : st;
}

vs_status vs_result_table_write_svg(const vs_result_table* table, const char* path) {
  VS_REQUIRE(table);
  VS_REQUIRE(path);
  return guarded([&] { write_text(path, voi::render_svg(table->table)); });
}

vs_status vs_match_config_create(vs_match_config** out) {
  VS_REQUIRE(out);
  return guarded([&] { *out = new vs_match_config(); });
}

void vs_match_config_destroy(vs_match_config* cfg) { delete cfg; }

vs_status vs_match_config_set_game(vs_match_config* cfg, const char* spec) {
  VS_REQUIRE(cfg);
  VS_REQUIRE(spec);
  return guarded([&] { cfg->config.game = voi::parse_game_spec(spec); });
}

vs_status vs_match_config_set_engines(vs_match_config* cfg, vs_engine a, vs_engine b) {
  VS_REQUIRE(cfg);
  return guarded([&] {
    cfg->config.a.kind = to_engine(a);
    cfg->config.b.kind = to_engine(b);
  });
}

vs_status vs_match_config_set_budgets(vs_match_config* cfg, const uint64_t* budgets, size_t count) {
  VS_REQUIRE(cfg);
  if (count > 0) VS_REQUIRE(budgets);
  cfg->config.budgets.assign(budgets, budgets + count);
  return VS_OK;
}

vs_status vs_match_config_set_games(vs_match_config* cfg, uint64_t games) {
  VS_REQUIRE(cfg);
  if (games < 1) return fail(VS_ERR_INVALID_ARGUMENT, "games must be at least 1");
  cfg->config.games = games;
  return VS_OK;
}

vs_status vs_match_config_set_uct_c(vs_match_config* cfg, double c) {
  VS_REQUIRE(cfg);
  if (!(c >= 0.0) || !std::isfinite(c)) return fail(VS_ERR_INVALID_ARGUMENT, "UCT constant must be non-negative");
  cfg->config.a.c = c;
  cfg->config.b.c = c;
  return VS_OK;
}

vs_status vs_match_config_set_voi_variant(vs_match_config* cfg, vs_voi_variant variant) {
  VS_REQUIRE(cfg);
  return guarded([&] {
    cfg->config.a.variant = to_variant(variant);
    cfg->config.b.variant = to_variant(variant);
  });
}

vs_status vs_match_config_set_seed(vs_match_config* cfg, uint64_t seed) {
  VS_REQUIRE(cfg);
  cfg->config.seed = seed;
  return VS_OK;
}

vs_status vs_match_config_set_threads(vs_match_config* cfg, uint32_t threads) {
  VS_REQUIRE(cfg);
  if (threads < 1) return fail(VS_ERR_INVALID_ARGUMENT, "threads must be at least 1");
  cfg->config.threads = threads;
  return VS_OK;
}

vs_status vs_run_match(const vs_match_config* cfg, vs_match_report** out) {
  VS_REQUIRE(cfg);
  VS_REQUIRE(out);
  return guarded([&] {
    auto report = std::make_unique<vs_match_report>();
    report->report = voi::run_match(cfg->config);
    report->comments = voi::describe(cfg->config);
    *out = report.release();
  });
}

void vs_match_report_destroy(vs_match_report* report) { delete report; }

size_t vs_match_report_size(const vs_match_report* report) { return report ? report->report.rows.size() : 0; }

vs_status vs_match_report_row(const vs_match_report* report, size_t index, vs_match_row* out) {
  VS_REQUIRE(report);
  VS_REQUIRE(out);
  if (index >= report->report.rows.size()) return fail(VS_ERR_INVALID_ARGUMENT, "row index out of range");
  const voi::MatchResult& r = report->report.rows[index];
  *out = {r.budget, r.games, r.a_wins, r.b_wins, r.draws, r.a_winrate, r.ci.low, r.ci.high};
  return VS_OK;
}

vs_status vs_match_report_write_csv(const vs_match_report* report, const char* path) {
  VS_REQUIRE(report);
  VS_REQUIRE(path);
  return guarded([&] { write_text(path, csv_text(*report)); });
}

vs_status vs_match_report_to_csv(const vs_match_report* report, char* buffer, size_t capacity, size_t* length) {
  VS_REQUIRE(report);
  std::string text;
  const vs_status st = guarded([&] { text = csv_text(*report); });
  return st == VS_OK ? copy_out(text, buffer, capacity, length) : st;
}

vs_status vs_match_report_write_svg(const vs_match_report* report, const char* path) {
  VS_REQUIRE(report);
  VS_REQUIRE(path);
  return guarded([&] { write_text(path, voi::render_svg(report->report)); });
}

vs_status vs_oracle_check(uint32_t arms, uint64_t budget, vs_policy policy, vs_voi_variant variant, double ucb_c,
                          uint64_t trials, uint64_t seed, uint32_t threads, vs_oracle_result* out) {
  VS_REQUIRE(out);
  if (arms < 2 || arms > VS_ORACLE_MAX_ARMS) return fail(VS_ERR_INVALID_ARGUMENT, "oracle arm count out of range");
  if (trials < 2) return fail(VS_ERR_INVALID_ARGUMENT, "oracle check needs at least 2 trials");
  return guarded([&] {
    const voi::PolicyKind kind = to_policy(policy, to_variant(variant), ucb_c);
    voi::Rng rng(voi::derive_seed(seed, {0}));
    const voi::BanditInstance instance = voi::generate_instance(arms, rng);
    const double exact = voi::brute_force_regret(instance, kind, budget);
    const voi::MonteCarloEstimate mc = voi::estimate_regret(instance, kind, budget, trials, seed, threads);

    vs_oracle_result r{};
    r.arms = arms;
    for (uint32_t i = 0; i < arms; ++i) r.means[i] = instance.mean(i);
    r.oracle_regret = exact;
    r.mc_regret = mc.mean;
    r.mc_stderr = mc.stderr_mean;
    r.trials = mc.trials;
    r.pass = std::abs(mc.mean - exact) <= 3.0 * mc.stderr_mean ? 1 : 0;
    *out = r;
  });
}

}  // extern "C"
