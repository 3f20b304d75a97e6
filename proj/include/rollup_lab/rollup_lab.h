/* rollup-lab: Rollup fee-mechanism attack simulator
 * Copyright 2026 The rollup-lab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ROLLUP_LAB_H
#define ROLLUP_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Amounts are in wei unless a name says otherwise. */

typedef enum rl_status
{
    RL_OK = 0,
    RL_ERROR_INVALID_ARGUMENT = 1,
    RL_ERROR_PARSE = 2,
    RL_ERROR_VALIDATION = 3,
    RL_ERROR_NOT_FOUND = 4,
    RL_ERROR_IO = 5,
    RL_ERROR_INTERNAL = 6
} rl_status;

RL_API const char* rl_version(void);

/* Message of the last failure on the calling thread; "" after success. */
RL_API const char* rl_last_error(void);

/* ---- rollup and L1 configuration ---- */

typedef struct rl_config rl_config;

RL_API size_t rl_registry_count(void);
/* NULL when out of range. */
RL_API const char* rl_registry_name(size_t index);
/* Date the registry values were collected. */
RL_API const char* rl_registry_stamp(void);

/* Accepts registry names and the "<name>-throttle" variant. */
RL_API rl_status rl_config_create(const char* rollup, rl_config** out);
RL_API rl_status rl_config_clone(const rl_config* config, rl_config** out);
RL_API void rl_config_destroy(rl_config* config);
/* Same fields and units as the scenario file's override.<field> keys. */
RL_API rl_status rl_config_set(rl_config* config, const char* field, const char* value);
RL_API rl_status rl_config_get(const rl_config* config, const char* field, double* out);
RL_API const char* rl_config_name(const rl_config* config);
/* Modelling caveat for the rollup, "" when none. */
RL_API const char* rl_config_caveat(const rl_config* config);
/* Number of override field names, and each name. */
RL_API size_t rl_config_field_count(void);
RL_API const char* rl_config_field_name(size_t index);

/* ---- scenarios ---- */

typedef struct rl_scenario rl_scenario;

typedef struct rl_scenario_values
{
    double budget_wei; /* +inf when unbounded */
    double priority_fee_wei;
    int64_t duration_blocks; /* -1 when unbounded */
    uint32_t delay_blocks;
    double eth_usd;
} rl_scenario_values;

RL_API rl_status rl_scenario_create(rl_scenario** out);
RL_API rl_status rl_scenario_load(const char* path, rl_scenario** out);
RL_API void rl_scenario_destroy(rl_scenario* scenario);
/* Keys as in a scenario file: budget_eth, priority_fee_gwei, duration_blocks,
 * delay_blocks, eth_usd, rollup, override.<field>. */
RL_API rl_status rl_scenario_set(rl_scenario* scenario, const char* key, const char* value);
RL_API rl_status rl_scenario_get(const rl_scenario* scenario, rl_scenario_values* out);
/* Rollup named by the scenario, "" when none. */
RL_API const char* rl_scenario_rollup(const rl_scenario* scenario);
/* Builds the scenario's rollup, or `fallback_rollup` if it names none, with its overrides. */
RL_API rl_status rl_scenario_resolve(const rl_scenario* scenario, const char* fallback_rollup, rl_config** out);

/* ---- fee mechanism ---- */

typedef struct rl_tx_resources
{
    double gas;
    double da_bytes;
    double commit_share_wei;
    double settle_share_wei;
    double priority_fee_wei;
} rl_tx_resources;

typedef struct rl_price_quote
{
    double l2_fee_wei;
    double l1_fee_wei;
    double total_wei;
} rl_price_quote;

RL_API rl_status rl_tx_fee(
    const rl_tx_resources* tx, double l2_base_fee_wei, double blob_price_wei, double scalar, rl_price_quote* out);

/* ---- attack trajectories ---- */

typedef struct rl_trajectory rl_trajectory;

typedef struct rl_interval
{
    uint64_t block;
    double price_wei;
    double c_blobs;
    double c_calldata;
    double c_txs;
    double c_batches;
    double total;
    double cumulative;
    double blobs_posted;
    double batches_committed;
    double backlog;
    double l2_blob_price_wei;
} rl_interval;

typedef struct rl_trajectory_summary
{
    uint64_t blocks_sustained;
    double total_spent_wei;
    int priced_out;
    int escalating;
    int flat_cost;
} rl_trajectory_summary;

RL_API rl_status rl_dos_simulate(const rl_config* config, const rl_scenario* scenario, rl_trajectory** out);
RL_API rl_status rl_dos_simulate_mitigated(const rl_config* config, const rl_scenario* scenario,
    double utilization_target, double adjustment_coefficient, rl_trajectory** out);
/* Attack, cool-down and backlog drain of the amplified finality attack. */
RL_API rl_status rl_finality_trajectory(
    const rl_config* config, double budget_wei, double priority_fee_wei, rl_trajectory** out);
RL_API void rl_trajectory_destroy(rl_trajectory* trajectory);
RL_API size_t rl_trajectory_size(const rl_trajectory* trajectory);
RL_API rl_status rl_trajectory_at(const rl_trajectory* trajectory, size_t index, rl_interval* out);
RL_API rl_status rl_trajectory_summary_get(const rl_trajectory* trajectory, rl_trajectory_summary* out);
RL_API const char* rl_trajectory_caveat(const rl_trajectory* trajectory);
RL_API rl_status rl_trajectory_write_csv(const rl_trajectory* trajectory, const char* path);

/* ---- finality delay ---- */

typedef struct rl_direct_delay_result
{
    double budget_wei;
    double k_l1;
    uint64_t k_blocks;
    uint64_t total_blocks;
    uint64_t simulated_blocks;
} rl_direct_delay_result;

typedef struct rl_amplified_delay_result
{
    double budget_wei;
    int susceptible;
    double t_batches;
    double k_l1;
    double total_blocks;
    double amplification;
    uint64_t simulated_blocks;
} rl_amplified_delay_result;

/* Uses only the L1 parameters of `config`. */
RL_API rl_status rl_direct_l1_delay(const rl_config* config, double budget_wei, rl_direct_delay_result* out);
RL_API rl_status rl_amplified_delay(const rl_config* config, double budget_wei, double priority_fee_wei,
    uint32_t delay_blocks, rl_amplified_delay_result* out);

/* ---- economic damage ---- */

typedef struct rl_econ_params
{
    double tx_per_hour;
    double batches_per_hour;
    double intrinsic_gas;
    double calldata_gas_per_tx;
    double l2_gas_price_wei;
    double blob_fee_per_tx_wei;
    double commit_gas;
    double l1_gas_price_wei;
    double eth_usd;
} rl_econ_params;

typedef struct rl_econ_report
{
    double intrinsic_hourly_wei;
    double calldata_hourly_wei;
    double blob_hourly_wei;
    double attacker_hourly_wei;
    double attacker_hourly_usd;
    double commit_cost_wei;
    double commit_cost_usd;
    double fees_per_batch_usd;
    double outlay_per_batch_usd;
    double loss_per_batch_usd;
    double loss_hourly_usd;
} rl_econ_report;

/* "scroll-appendix-c" is the only preset. */
RL_API rl_status rl_econ_preset(const char* name, rl_econ_params* out);
RL_API rl_status rl_economic_damage(const rl_econ_params* params, rl_econ_report* out);
/* format: "csv" or "text". */
RL_API rl_status rl_econ_write(const rl_econ_params* params, const char* format, const char* path);

/* ---- prover economics ---- */

typedef struct rl_prover_rates
{
    double usd_per_hour;
    double l2_base_fee_wei;
    double eth_usd;
    double cycles_per_second;
} rl_prover_rates;

typedef struct rl_prover_report
{
    char name[48];
    double total_gas;
    double total_cycles;
    double proving_time_s;
    double proving_cost_usd;
    double fees_usd;
    double profit_loss_usd;
    double latency_delay_s;
    double latency_delay_pct;
    int estimated;
    int over_gas_cap;
} rl_prover_report;

RL_API void rl_prover_rates_default(rl_prover_rates* out);
RL_API size_t rl_prover_attack_count(void);
RL_API const char* rl_prover_attack_name(size_t index);
RL_API rl_status rl_prover_attack_report(const char* attack, const rl_prover_rates* rates, rl_prover_report* out);
/* Profile CSV with rows "opcode,count". */
RL_API rl_status rl_prover_profile_report(
    const char* profile_path, const rl_prover_rates* rates, rl_prover_report* out);
RL_API rl_status rl_prover_write_csv(const rl_prover_report* rows, size_t count, const char* path);

/* ---- calldata ---- */

typedef struct rl_calldata_point
{
    double zero_ratio;
    int quality;
    double mean_gas;
    double expected_gas;
    double mean_ratio;
} rl_calldata_point;

/* schedule: "pectra" or "pre-pectra". */
RL_API rl_status rl_gas_to_fill_blob(const char* schedule, double zero_ratio, double* out);
/* compressor: "entropy", or "deflate" when available. */
RL_API int rl_compressor_available(const char* compressor);
RL_API rl_status rl_calldata_sweep_point(const char* schedule, const char* compressor, double zero_ratio,
    int quality, size_t payload_size, uint64_t first_seed, uint32_t seeds, rl_calldata_point* out);
RL_API rl_status rl_payload_write(size_t size, double zero_ratio, uint64_t seed, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* ROLLUP_LAB_H */
