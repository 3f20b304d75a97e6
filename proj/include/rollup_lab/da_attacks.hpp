// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "config.hpp"
#include "tfm.hpp"
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rollup_lab
{
/// Per-L1-interval attack volume.
struct IntervalProfile
{
    double r = 0;  ///< L2 blocks per L1 block.
    double t_blobs = 0;
    double t_tx = 0;
    double t_batches = 0;
    double q = 0;  ///< Blobs carried into the next interval.
};

IntervalProfile interval_profile(const RollupConfig& rollup, const L1Params& l1, double q_in = 0);

struct CostBreakdown
{
    Money c_blobs = 0;
    Money c_calldata = 0;
    Money c_txs = 0;
    Money c_batches = 0;
    Money total = 0;
};

CostBreakdown interval_cost(
    const IntervalProfile& profile, Money rho_blob, const RollupConfig& rollup, const L1Params& l1, Money delta);

struct IntervalRecord
{
    std::uint64_t block = 0;  ///< 1-based L1 block of the interval.
    Money price = 0;          ///< Blob price the attacker is charged.
    CostBreakdown cost;
    Money cumulative = 0;
    double blobs_posted = 0;
    double batches_committed = 0;
    double backlog = 0;
    Money l2_blob_price = 0;  ///< Mitigated runs only.
};

struct AttackTrajectory
{
    std::string rollup;
    std::string caveat;
    std::vector<IntervalRecord> records;
    std::uint64_t blocks_sustained = 0;
    Money total_spent = 0;
    bool priced_out = false;
    bool escalating = false;
    std::uint32_t delay = 0;
};

/// Saturates the rollup's DA every interval until the budget or the duration
/// runs out. With a delay the attacker pays the delayed price and the rollup
/// only posts when the live price does not exceed it.
AttackTrajectory simulate_dos(
    const RollupConfig& rollup, const L1Params& l1, const AttackScenario& scenario, bool others_fill = false);

/// As simulate_dos with an L2 blob base fee charged per L2 block.
AttackTrajectory simulate_dos_mitigated(const RollupConfig& rollup, const L1Params& l1,
    const AttackScenario& scenario, const MitigatedDaPrice& mitigation);

/// Intervals affordable before cumulative cost exceeds the budget.
std::uint64_t sustainable_blocks(
    const RollupConfig& rollup, const L1Params& l1, Money budget, Money delta = gwei(0.2));

/// True when every interval costs the same, i.e. cumulative cost is linear.
bool cost_is_flat(const AttackTrajectory& trajectory, double rel_tol = 1e-12);

/// Cumulative cost after one hour of L1 blocks.
Money hourly_cost(const AttackTrajectory& trajectory, const L1Params& l1);

struct DirectDelay
{
    Money budget = 0;
    double k_l1 = 0;
    std::uint64_t k_blocks = 0;  ///< floor(k_l1).
    std::uint64_t total_blocks = 0;  ///< Blocking plus cool-down.
    std::uint64_t simulated_blocks = 0;
};

/// Blob stuffing on L1 alone: blob_limit blobs per block at a rising price.
DirectDelay direct_l1_delay(Money budget, const L1Params& l1);

struct AmplifiedDelay
{
    Money budget = 0;
    bool susceptible = false;
    double t_batches = 0;
    double k_l1 = 0;
    double total_blocks = 0;
    double amplification = 0;
    Money residual = 0;  ///< spend(k_l1) - budget.
    Money marginal_cost = 0;  ///< Cost of the interval at k_l1.
    std::uint64_t simulated_blocks = 0;
    std::uint32_t delay = 0;
};

/// Finality delay through the L2: the attacker pays the L2 interval cost while
/// other L1 users keep blocks full, then the backlog drains one batch per block.
AmplifiedDelay amplified_delay(const RollupConfig& rollup, Money budget, const L1Params& l1, Money delta = gwei(0.2));

/// Amplified delay when the rollup charges the blob price from d blocks ago
/// and posts only when the live price is not above it.
AmplifiedDelay delayed_amplified_delay(
    const RollupConfig& rollup, Money budget, const L1Params& l1, std::uint32_t d, Money delta = gwei(0.2));

/// Attack, cool-down and backlog drain, block by block.
AttackTrajectory amplified_trajectory(
    const RollupConfig& rollup, Money budget, const L1Params& l1, Money delta = gwei(0.2));

struct DelayedReport
{
    AttackTrajectory dos;
    AmplifiedDelay finality;
};

/// The DoS and finality attacks rerun with the scenario's price-update delay.
DelayedReport delayed_variants(const RollupConfig& rollup, const L1Params& l1, const AttackScenario& scenario);

struct EconParams
{
    double tx_per_hour = 1200;
    double batches_per_hour = 1200;
    double intrinsic_gas = 21'000;
    double calldata_gas_per_tx = 2'080'064;
    Money l2_gas_price = gwei(0.25);
    /// Not derivable from the other inputs; the default reproduces 0.0052 ETH/h.
    Money blob_fee_per_tx = eth(0.0052) / 1200;
    double commit_gas = 849'900;
    Money l1_gas_price = gwei(5);
    double eth_usd = 2500;
};

struct EconDamageReport
{
    Money intrinsic_per_tx = 0;
    Money calldata_per_tx = 0;
    Money blob_per_tx = 0;
    Money intrinsic_hourly = 0;
    Money calldata_hourly = 0;
    Money blob_hourly = 0;
    Money attacker_hourly = 0;
    double attacker_hourly_usd = 0;
    Money commit_cost = 0;
    double commit_cost_usd = 0;
    /// Receipt amounts, whole cents.
    double fees_per_batch_usd = 0;
    double outlay_per_batch_usd = 0;
    double loss_per_batch_usd = 0;
    double loss_hourly_usd = 0;
};

EconDamageReport economic_damage(const EconParams& params);

void write_trajectory_csv(std::ostream& out, const AttackTrajectory& trajectory);
void write_econ_csv(std::ostream& out, const EconDamageReport& report);
void write_econ_text(std::ostream& out, const EconDamageReport& report, const EconParams& params);
}  // namespace rollup_lab
