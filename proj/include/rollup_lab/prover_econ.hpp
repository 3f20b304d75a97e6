// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "units.hpp"
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rollup_lab
{
enum class CostTable
{
    highest_opcodes,
    lowest_opcodes,
    precompiles,
};

struct OpcodeCost
{
    std::string name;
    double gas = 0;
    double cycles = 0;
    double cycles_per_gas = 0;
    CostTable table = CostTable::highest_opcodes;
};

/// The 24 published cycle-cost rows: 8 highest and 8 lowest cycles/gas
/// opcodes, then the 8 precompiles.
const std::vector<OpcodeCost>& load_tables();

/// The 16 opcode rows (no precompiles).
std::vector<OpcodeCost> opcode_rows();

const OpcodeCost& find_opcode(std::string_view name);

/// Sorted by cycles_per_gas, ties by name. n larger than the table is an error.
std::vector<OpcodeCost> mispricing_rank(std::vector<OpcodeCost> table, bool ascending, std::size_t n);

inline constexpr double full_table_median_cycles_per_gas = 369.09;
inline constexpr double full_table_mean_cycles_per_gas = 347.16;

struct MedianReport
{
    double median = 0;
    std::size_t rows = 0;
    /// The published rows are a subset of the full opcode table.
    bool subset = true;
};

MedianReport median_cycles_per_gas(const std::vector<OpcodeCost>& table);

struct BlockProfile
{
    std::vector<std::pair<std::string, double>> entries;
    std::optional<double> declared_gas;
};

inline constexpr double block_gas_cap = 36e6;

double block_cycles(const BlockProfile& profile);
double block_gas(const BlockProfile& profile);
/// Non-fatal findings, e.g. a block above the gas cap.
std::vector<std::string> profile_warnings(const BlockProfile& profile);

BlockProfile parse_profile_csv(std::istream& in);
BlockProfile load_profile_csv(const std::filesystem::path& path);

double proving_time(double cycles, double cycles_per_second);
double proving_cost(double seconds, double usd_per_hour);
double fees_collected(double gas, Money l2_base_fee, double eth_usd);

struct ProverBaseline
{
    double min_cycles = 65.73e6, max_cycles = 549.73e6, avg_cycles = 289.82e6, median_cycles = 289.51e6;
    double min_gas = 3.48e6, max_gas = 35.85e6, avg_gas = 17.70e6, median_gas = 17.85e6;
    double min_time_s = 91, max_time_s = 600, avg_time_s = 319, median_time_s = 320;
    double min_cost_usd = 0.13, max_cost_usd = 0.85, avg_cost_usd = 0.45, median_cost_usd = 0.45;
};

/// Statistics of proving ordinary mainnet blocks.
ProverBaseline normal_block_baseline();

struct ProverRates
{
    double usd_per_hour = 5.07;
    /// Effective fee implied by the attack table's fee column.
    Money l2_base_fee = gwei(0.009);
    double eth_usd = 2500;
    /// Cycles-to-time estimator, from the normal-block medians.
    double cycles_per_second = 289.51e6 / 320;
};

/// The L2 base fee stated alongside the prover cost assumptions. Its fees do
/// not match the attack table.
inline constexpr Money stated_l2_base_fee = gwei(0.1);

struct AttackMeasurement
{
    std::string name;
    double gas = 0;
    double cycles = 0;
    std::optional<double> time_s;  ///< Measured proving time.
    std::optional<double> cycles_per_second;  ///< Extrapolation rate when unmeasured.
};

/// The nine prover-killer blocks.
const std::vector<AttackMeasurement>& builtin_attacks();
const AttackMeasurement& find_attack(std::string_view name);

struct ProverReport
{
    std::string name;
    double total_gas = 0;
    double total_cycles = 0;
    double proving_time_s = 0;
    double proving_cost_usd = 0;
    double fees_usd = 0;
    double profit_loss_usd = 0;
    double latency_delay_s = 0;
    double latency_delay_pct = 0;
    bool estimated = false;
    bool over_gas_cap = false;
};

ProverReport attack_report(const AttackMeasurement& m, const ProverBaseline& baseline, const ProverRates& rates);
ProverReport attack_report(
    std::string name, const BlockProfile& profile, const ProverBaseline& baseline, const ProverRates& rates);

void write_prover_csv(std::ostream& out, const std::vector<ProverReport>& rows);
}  // namespace rollup_lab
