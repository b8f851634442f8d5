#include "voisearch/voisearch.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string table_csv(const vs_result_table* t) {
  size_t len = 0;
  EXPECT_EQ(vs_result_table_to_csv(t, nullptr, 0, &len), VS_OK);
  std::string text(len + 1, '\0');
  EXPECT_EQ(vs_result_table_to_csv(t, text.data(), text.size(), &len), VS_OK);
  text.resize(len);
  return text;
}

TEST(CApiTest, BanditRunRowsAndCsv) {
  vs_bandit_config* cfg = nullptr;
  ASSERT_EQ(vs_bandit_config_create(&cfg), VS_OK);
  const uint64_t budgets[] = {4, 8};
  ASSERT_EQ(vs_bandit_config_set_arms(cfg, 4), VS_OK);
  ASSERT_EQ(vs_bandit_config_set_budgets(cfg, budgets, 2), VS_OK);
  ASSERT_EQ(vs_bandit_config_set_trials(cfg, 50), VS_OK);
  ASSERT_EQ(vs_bandit_config_add_policy(cfg, VS_POLICY_UCB1), VS_OK);
  ASSERT_EQ(vs_bandit_config_add_policy(cfg, VS_POLICY_VOI), VS_OK);
  ASSERT_EQ(vs_bandit_config_set_voi_variant(cfg, VS_VOI_PHI), VS_OK);
  ASSERT_EQ(vs_bandit_config_set_seed(cfg, 3), VS_OK);

  vs_result_table* table = nullptr;
  ASSERT_EQ(vs_run_bandit(cfg, &table), VS_OK) << vs_last_error();
  ASSERT_EQ(vs_result_table_size(table), 4u);
  vs_result_row row{};
  ASSERT_EQ(vs_result_table_row(table, 3, &row), VS_OK);
  EXPECT_STREQ(row.policy, "voi-phi");
  EXPECT_EQ(row.budget, 8u);
  EXPECT_EQ(row.trials, 50u);
  EXPECT_EQ(vs_result_table_row(table, 4, &row), VS_ERR_INVALID_ARGUMENT);

  const std::string csv = table_csv(table);
  EXPECT_NE(csv.find("# seed=3\n"), std::string::npos);
  EXPECT_NE(csv.find("policy,budget,mean_regret,stderr,trials\n"), std::string::npos);

  char small[8];
  size_t len = 0;
  ASSERT_EQ(vs_result_table_to_csv(table, small, sizeof small, &len), VS_OK);
  EXPECT_EQ(len, csv.size());
  EXPECT_EQ(std::string(small), csv.substr(0, 7));

  const auto dir = std::filesystem::temp_directory_path();
  ASSERT_EQ(vs_result_table_write_csv(table, (dir / "vs_capi.csv").c_str()), VS_OK);
  EXPECT_EQ(slurp(dir / "vs_capi.csv"), csv);
  ASSERT_EQ(vs_result_table_write_svg(table, (dir / "vs_capi.svg").c_str()), VS_OK);
  EXPECT_EQ(vs_result_table_write_csv(table, "/nonexistent-dir/x.csv"), VS_ERR_IO);
  EXPECT_NE(std::string(vs_last_error()), "");

  vs_result_table_destroy(table);
  vs_bandit_config_destroy(cfg);
}

TEST(CApiTest, ConfigErrorsCarryMessages) {
  vs_bandit_config* cfg = nullptr;
  ASSERT_EQ(vs_bandit_config_create(&cfg), VS_OK);
  EXPECT_EQ(vs_bandit_config_set_arms(cfg, 1), VS_ERR_INVALID_ARGUMENT);
  const uint64_t budgets[] = {16};
  vs_bandit_config_set_budgets(cfg, budgets, 1);
  vs_bandit_config_add_policy(cfg, VS_POLICY_VOI);
  vs_result_table* table = nullptr;
  EXPECT_EQ(vs_run_bandit(cfg, &table), VS_ERR_CONFIG);  // 32 arms default > budget 16
  EXPECT_EQ(table, nullptr);
  EXPECT_NE(std::string(vs_last_error()).find("budget"), std::string::npos);
  EXPECT_EQ(vs_bandit_config_set_threads(nullptr, 2), VS_ERR_INVALID_ARGUMENT);
  vs_bandit_config_destroy(cfg);
}

TEST(CApiTest, MatchRunAndSelfPlay) {
  vs_match_config* cfg = nullptr;
  ASSERT_EQ(vs_match_config_create(&cfg), VS_OK);
  EXPECT_EQ(vs_match_config_set_game(cfg, "chess"), VS_ERR_CONFIG);
  ASSERT_EQ(vs_match_config_set_game(cfg, "ptree:3,5,0.5"), VS_OK);
  ASSERT_EQ(vs_match_config_set_engines(cfg, VS_ENGINE_UCT, VS_ENGINE_UCT), VS_OK);
  const uint64_t budgets[] = {16, 32};
  ASSERT_EQ(vs_match_config_set_budgets(cfg, budgets, 2), VS_OK);
  ASSERT_EQ(vs_match_config_set_games(cfg, 10), VS_OK);

  vs_match_report* report = nullptr;
  ASSERT_EQ(vs_run_match(cfg, &report), VS_OK) << vs_last_error();
  ASSERT_EQ(vs_match_report_size(report), 2u);
  vs_match_row row{};
  ASSERT_EQ(vs_match_report_row(report, 1, &row), VS_OK);
  EXPECT_EQ(row.budget, 32u);
  EXPECT_EQ(row.a_winrate, 0.5);
  EXPECT_EQ(row.a_wins + row.b_wins + row.draws, row.games);

  size_t len = 0;
  ASSERT_EQ(vs_match_report_to_csv(report, nullptr, 0, &len), VS_OK);
  EXPECT_GT(len, 0u);
  const auto dir = std::filesystem::temp_directory_path();
  ASSERT_EQ(vs_match_report_write_svg(report, (dir / "vs_match.svg").c_str()), VS_OK);
  vs_match_report_destroy(report);
  vs_match_config_destroy(cfg);
}

TEST(CApiTest, OracleCheck) {
  vs_oracle_result r{};
  ASSERT_EQ(vs_oracle_check(2, 8, VS_POLICY_VOI, VS_VOI_CONST, 1.0, 20000, 1, 1, &r), VS_OK) << vs_last_error();
  EXPECT_EQ(r.arms, 2u);
  EXPECT_EQ(r.trials, 20000u);
  EXPECT_GE(r.oracle_regret, 0.0);
  EXPECT_EQ(r.pass, std::abs(r.mc_regret - r.oracle_regret) <= 3 * r.mc_stderr);
  EXPECT_EQ(vs_oracle_check(2, 21, VS_POLICY_VOI, VS_VOI_CONST, 1.0, 100, 1, 1, &r), VS_ERR_LIMIT);
  EXPECT_EQ(vs_oracle_check(9, 10, VS_POLICY_VOI, VS_VOI_CONST, 1.0, 100, 1, 1, &r), VS_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, DefaultsAndVersion) {
  EXPECT_STREQ(vs_version(), "1.0.0");
  EXPECT_EQ(vs_default_seed(), 20120101u);
  EXPECT_EQ(vs_result_table_size(nullptr), 0u);
}

}  // namespace
