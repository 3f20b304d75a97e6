// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "units.hpp"
#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace rollup_lab
{
struct TxResources
{
    double g = 0;        ///< L2 gas.
    double b_tx = 0;     ///< DA bytes.
    Money c_tx = 0;      ///< Commit share.
    Money s_tx = 0;      ///< Settlement share.
    Money delta = 0;     ///< Priority fee per gas.
};

struct PriceQuote
{
    Money l2_fee = 0;
    Money l1_fee = 0;
    Money total = 0;
};

Money l2_fee(Money rho_l2, Money delta, double g) noexcept;
Money l1_fee(Money rho_blob, double scalar, double b_tx, Money c_tx, Money s_tx) noexcept;
PriceQuote tx_fee(const TxResources& tx, Money rho_l2, Money rho_blob, double scalar);

/// L2 blob base fee that tracks per-block DA utilization and never drops
/// below the L1 blob fee.
struct MitigatedDaPrice
{
    Money rho_l2_blob = 1;
    double utilization_target = 0.5;
    double adjustment_coefficient = 0.125;
};

MitigatedDaPrice mitigated_da_step(
    const MitigatedDaPrice& state, double da_used, double da_capacity, Money rho_blob_l1);

inline constexpr std::size_t resource_dims = 4;
using ResourceVector = std::array<double, resource_dims>;

enum Resource : std::size_t
{
    gas = 0,
    da = 1,
    proving = 2,
    fixed = 3,
};

std::string_view resource_name(std::size_t dim);

struct ResourceMarket
{
    ResourceVector prices{1, 1, 1, 1};
    ResourceVector b_star{};
    ResourceVector b{};
};

struct Candidate
{
    ResourceVector a{};  ///< Resource column A_j.
    Money bid = 0;
};

/// One proportional update per dimension with coefficient 1/8.
ResourceVector mdtfm_update(const ResourceMarket& market, const ResourceVector& usage);

/// Greedy block fill by bid per unit of priced resource, skipping candidates
/// that would break a limit. Returns the inclusion vector.
std::vector<bool> mdtfm_build_block(const std::vector<Candidate>& candidates, const ResourceMarket& market);

/// A·x for an inclusion vector.
ResourceVector block_usage(const std::vector<Candidate>& candidates, const std::vector<bool>& x);
}  // namespace rollup_lab
