/* C interface to the voisearch library: VOI-aware bandit sampling
 * experiments and equal-budget MCTS engine matches.
 *
 * Every handle is opaque and owned by the caller; release it with the
 * matching *_destroy function. Functions returning vs_status report failure
 * through the code and leave a message retrievable with vs_last_error() on
 * the calling thread. */
#ifndef VOISEARCH_H
#define VOISEARCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VS_API __declspec(dllexport)
#else
#define VS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vs_status {
  VS_OK = 0,
  VS_ERR_INVALID_ARGUMENT = 1, /* bad index, bad value, null handle */
  VS_ERR_PRECONDITION = 2,     /* operation not valid in the current state */
  VS_ERR_CONFIG = 3,           /* experiment or match configuration rejected */
  VS_ERR_LIMIT = 4,            /* request exceeds an explicit limit */
  VS_ERR_IO = 5,               /* file could not be written */
  VS_ERR_INTERNAL = 6
} vs_status;

typedef enum vs_policy { VS_POLICY_UNIFORM = 0, VS_POLICY_UCB1 = 1, VS_POLICY_VOI = 2 } vs_policy;

typedef enum vs_voi_variant { VS_VOI_CONST = 0, VS_VOI_PHI = 1 } vs_voi_variant;

typedef enum vs_engine { VS_ENGINE_UCT = 0, VS_ENGINE_VOI = 1 } vs_engine;

typedef struct vs_bandit_config vs_bandit_config;
typedef struct vs_result_table vs_result_table;
typedef struct vs_match_config vs_match_config;
typedef struct vs_match_report vs_match_report;

typedef struct vs_result_row {
  const char* policy; /* valid while the owning table lives */
  uint64_t budget;
  double mean_regret;
  double stderr_regret;
  uint64_t trials;
} vs_result_row;

typedef struct vs_match_row {
  uint64_t budget;
  uint64_t games;
  uint64_t a_wins;
  uint64_t b_wins;
  uint64_t draws;
  double a_winrate;
  double ci_low;
  double ci_high;
} vs_match_row;

#define VS_ORACLE_MAX_ARMS 8

typedef struct vs_oracle_result {
  uint32_t arms;
  double means[VS_ORACLE_MAX_ARMS];
  double oracle_regret;
  double mc_regret;
  double mc_stderr;
  uint64_t trials;
  int pass; /* |mc - oracle| <= 3 * stderr */
} vs_oracle_result;

VS_API const char* vs_version(void);
VS_API const char* vs_last_error(void);
VS_API uint64_t vs_default_seed(void);

/* Bandit experiments. Defaults: 32 arms, no budgets, 10000 trials, no
 * policies, VOI variant const, UCB1 c = 1, default seed, 1 thread. */
VS_API vs_status vs_bandit_config_create(vs_bandit_config** out);
VS_API void vs_bandit_config_destroy(vs_bandit_config* cfg);
VS_API vs_status vs_bandit_config_set_arms(vs_bandit_config* cfg, uint32_t arms);
VS_API vs_status vs_bandit_config_set_budgets(vs_bandit_config* cfg, const uint64_t* budgets, size_t count);
VS_API vs_status vs_bandit_config_set_trials(vs_bandit_config* cfg, uint64_t trials);
VS_API vs_status vs_bandit_config_add_policy(vs_bandit_config* cfg, vs_policy policy);
VS_API vs_status vs_bandit_config_set_voi_variant(vs_bandit_config* cfg, vs_voi_variant variant);
VS_API vs_status vs_bandit_config_set_ucb_c(vs_bandit_config* cfg, double c);
VS_API vs_status vs_bandit_config_set_seed(vs_bandit_config* cfg, uint64_t seed);
VS_API vs_status vs_bandit_config_set_threads(vs_bandit_config* cfg, uint32_t threads);

VS_API vs_status vs_run_bandit(const vs_bandit_config* cfg, vs_result_table** out);
VS_API void vs_result_table_destroy(vs_result_table* table);
VS_API size_t vs_result_table_size(const vs_result_table* table);
VS_API vs_status vs_result_table_row(const vs_result_table* table, size_t index, vs_result_row* out);
/* CSV preceded by "# key=value" lines describing the resolved configuration. */
VS_API vs_status vs_result_table_write_csv(const vs_result_table* table, const char* path);
VS_API vs_status vs_result_table_write_svg(const vs_result_table* table, const char* path);
/* Copies the CSV text into `buffer` (NUL-terminated, truncated to `capacity`)
 * and stores the full length excluding the terminator in `*length`. Pass a
 * null buffer to query the length. */
VS_API vs_status vs_result_table_to_csv(const vs_result_table* table, char* buffer, size_t capacity, size_t* length);

/* Engine matches; engine A is VOI and engine B is UCT unless changed.
 * Game spec: "ptree:<b>,<d>,<p>" or "connect4-5x5" (default). */
VS_API vs_status vs_match_config_create(vs_match_config** out);
VS_API void vs_match_config_destroy(vs_match_config* cfg);
VS_API vs_status vs_match_config_set_game(vs_match_config* cfg, const char* spec);
VS_API vs_status vs_match_config_set_engines(vs_match_config* cfg, vs_engine a, vs_engine b);
VS_API vs_status vs_match_config_set_budgets(vs_match_config* cfg, const uint64_t* budgets, size_t count);
VS_API vs_status vs_match_config_set_games(vs_match_config* cfg, uint64_t games);
VS_API vs_status vs_match_config_set_uct_c(vs_match_config* cfg, double c);
VS_API vs_status vs_match_config_set_voi_variant(vs_match_config* cfg, vs_voi_variant variant);
VS_API vs_status vs_match_config_set_seed(vs_match_config* cfg, uint64_t seed);
VS_API vs_status vs_match_config_set_threads(vs_match_config* cfg, uint32_t threads);

VS_API vs_status vs_run_match(const vs_match_config* cfg, vs_match_report** out);
VS_API void vs_match_report_destroy(vs_match_report* report);
VS_API size_t vs_match_report_size(const vs_match_report* report);
VS_API vs_status vs_match_report_row(const vs_match_report* report, size_t index, vs_match_row* out);
VS_API vs_status vs_match_report_write_csv(const vs_match_report* report, const char* path);
VS_API vs_status vs_match_report_write_svg(const vs_match_report* report, const char* path);
VS_API vs_status vs_match_report_to_csv(const vs_match_report* report, char* buffer, size_t capacity, size_t* length);

/* Compares the exact enumerated regret with a Monte-Carlo estimate on one
 * random instance drawn from `seed`. arms <= VS_ORACLE_MAX_ARMS, budget <= 20. */
VS_API vs_status vs_oracle_check(uint32_t arms, uint64_t budget, vs_policy policy, vs_voi_variant variant,
                                 double ucb_c, uint64_t trials, uint64_t seed, uint32_t threads,
                                 vs_oracle_result* out);

#ifdef __cplusplus
}
#endif

#endif /* VOISEARCH_H */
