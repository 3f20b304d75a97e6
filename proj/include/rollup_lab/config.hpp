// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "units.hpp"
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rollup_lab
{
struct RollupConfig
{
    std::string name;
    double bt_l2 = 1;  ///< L2 block time, seconds.
    double max_blobs_per_batch = 1;
    std::optional<double> block_blob_limit;  ///< Per-L2-block DA cap in blobs.
    double tx_to_fill = 1;
    Money commit_cost_c_batch = 0;  ///< Per batch.
    Money l2_base_fee = 0;          ///< Per L2 gas.
    double scalar_blob = 1;
    std::string ordering_note;

    friend bool operator==(const RollupConfig&, const RollupConfig&) = default;
};

enum class DecayRule
{
    inverse,  ///< Divide by u_blob, undoing one increase exactly.
    fixed,    ///< Multiply by decay_fixed_factor.
    off,
};

struct L1Params
{
    double bt_l1 = 12;
    double blob_target = 6;
    double blob_limit = 9;
    double u_blob = 1.15;
    Money rho_blob_0 = 1;
    Money blob_floor = 0;
    double gas_per_blob_calldata = 2.08e6;
    double gas_per_blob_fill = 5'124'950;
    double blob_gas_per_blob = 131'072;
    double intrinsic_tx_gas = 21'000;
    DecayRule decay = DecayRule::inverse;
    double decay_fixed_factor = 0.85;

    friend bool operator==(const L1Params&, const L1Params&) = default;
};

/// Throws Error(validation) naming the offending field.
void validate(const RollupConfig& rollup);
void validate(const L1Params& l1);

/// The six rollups of the May 2025 comparison table. Immutable.
const std::vector<RollupConfig>& builtin_registry();

/// Looks up a registry rollup by name, case-insensitively. Accepts the
/// "<name>-throttle" form for the throttle-mode variant.
RollupConfig find_rollup(std::string_view name);

/// OP-stack throttle mode: DA is capped at one blob per L2 block and the
/// per-transaction byte cap doubles the transactions needed per blob.
RollupConfig throttle_mode(const RollupConfig& rollup);

/// L1 parameters with the post-Pectra calldata cost of one full blob used
/// for the L2 calldata and blob terms.
L1Params post_pectra(L1Params l1);

/// Applies one `<field> = <value>` override to either structure.
/// Throws Error(not_found) for unknown fields, Error(parse) for bad values.
void apply_override(RollupConfig& rollup, L1Params& l1, std::string_view field, std::string_view value);

/// Names accepted by apply_override.
const std::vector<std::string>& override_fields();

struct AttackScenario
{
    Money budget = unbounded;
    Money priority_fee = gwei(0.2);
    std::optional<std::uint64_t> duration;  ///< L1 blocks; absent means unbounded.
    std::uint32_t delay = 0;                 ///< Blob-price update delay, L1 blocks.
    double eth_usd = 2500;

    friend bool operator==(const AttackScenario&, const AttackScenario&) = default;
};

void validate(const AttackScenario& scenario);

struct ScenarioFile
{
    AttackScenario scenario;
    std::string rollup;
    std::map<std::string, std::string> overrides;

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;

    /// Resolves the named rollup (or `fallback` when none was given) and applies
    /// the overrides. Validates the result.
    void resolve(RollupConfig& rollup_out, L1Params& l1_out, std::string_view fallback = {}) const;
};

/// Sets one scenario key as it would appear in a file.
void set_scenario_key(ScenarioFile& file, std::string_view key, std::string_view value);

ScenarioFile parse_scenario(std::istream& in);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Strict numeric parsing shared by the config readers.
double parse_number(std::string_view text, std::string_view what);
}  // namespace rollup_lab
