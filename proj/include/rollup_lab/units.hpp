// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace rollup_lab
{
/// Amounts of ether are carried as doubles denominated in wei.
using Money = double;

inline constexpr double wei_per_gwei = 1e9;
inline constexpr double wei_per_eth = 1e18;
inline constexpr Money unbounded = std::numeric_limits<double>::infinity();

constexpr Money gwei(double x) noexcept
{
    return x * wei_per_gwei;
}

constexpr Money eth(double x) noexcept
{
    return x * wei_per_eth;
}

constexpr double to_gwei(Money wei) noexcept
{
    return wei / wei_per_gwei;
}

constexpr double to_eth(Money wei) noexcept
{
    return wei / wei_per_eth;
}

constexpr double to_usd(Money wei, double eth_usd) noexcept
{
    return to_eth(wei) * eth_usd;
}

constexpr Money from_usd(double usd, double eth_usd) noexcept
{
    return eth(usd / eth_usd);
}

/// Rounds a dollar amount to whole cents, half away from zero.
inline double round_cents(double usd) noexcept
{
    return std::round(usd * 100.0) / 100.0;
}
}  // namespace rollup_lab
