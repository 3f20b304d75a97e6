// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/error.hpp>
#include <rollup_lab/tfm.hpp>
#include <algorithm>
#include <numeric>
#include <string>

namespace rollup_lab
{
Money l2_fee(Money rho_l2, Money delta, double g) noexcept
{
    return (rho_l2 + delta) * g;
}

Money l1_fee(Money rho_blob, double scalar, double b_tx, Money c_tx, Money s_tx) noexcept
{
    return rho_blob * scalar * b_tx + c_tx + s_tx;
}

PriceQuote tx_fee(const TxResources& tx, Money rho_l2, Money rho_blob, double scalar)
{
    if (tx.g < 0 || tx.b_tx < 0 || tx.c_tx < 0 || tx.s_tx < 0 || tx.delta < 0)
        throw Error{ErrorKind::invalid_argument, "transaction resources must be non-negative"};
    PriceQuote q;
    q.l2_fee = l2_fee(rho_l2, tx.delta, tx.g);
    q.l1_fee = l1_fee(rho_blob, scalar, tx.b_tx, tx.c_tx, tx.s_tx);
    q.total = q.l2_fee + q.l1_fee;
    return q;
}

MitigatedDaPrice mitigated_da_step(
    const MitigatedDaPrice& state, double da_used, double da_capacity, Money rho_blob_l1)
{
    if (da_used < 0 || !(da_capacity > 0))
        throw Error{ErrorKind::invalid_argument, "DA usage must be >= 0 and capacity > 0"};
    if (!(state.utilization_target > 0 && state.utilization_target <= 1))
        throw Error{ErrorKind::invalid_argument, "utilization target must be in (0, 1]"};
    const double target = state.utilization_target * da_capacity;
    auto next = state;
    next.rho_l2_blob *= 1 + state.adjustment_coefficient * (da_used - target) / target;
    next.rho_l2_blob = std::max(next.rho_l2_blob, rho_blob_l1);
    return next;
}

std::string_view resource_name(std::size_t dim)
{
    static constexpr std::string_view names[resource_dims]{"gas", "DA", "proving", "fixed"};
    return dim < resource_dims ? names[dim] : "?";
}

ResourceVector mdtfm_update(const ResourceMarket& market, const ResourceVector& usage)
{
    ResourceVector p{};
    for (std::size_t i = 0; i < resource_dims; ++i)
    {
        if (!(market.b_star[i] > 0))
            throw Error{ErrorKind::invalid_argument,
                "degenerate target for dimension " + std::string{resource_name(i)}};
        if (usage[i] < 0)
            throw Error{ErrorKind::invalid_argument,
                "negative usage for dimension " + std::string{resource_name(i)}};
        p[i] = market.prices[i] * (1 + (usage[i] - market.b_star[i]) / market.b_star[i] / 8);
    }
    return p;
}

std::vector<bool> mdtfm_build_block(const std::vector<Candidate>& candidates, const ResourceMarket& market)
{
    std::vector<double> density(candidates.size());
    for (std::size_t j = 0; j < candidates.size(); ++j)
    {
        const auto& c = candidates[j];
        double priced = 0;
        for (std::size_t i = 0; i < resource_dims; ++i)
            priced += market.prices[i] * c.a[i];
        density[j] = priced > 0 ? c.bid / priced : unbounded;
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
        [&](std::size_t l, std::size_t r) { return density[l] > density[r]; });

    std::vector<bool> x(candidates.size(), false);
    ResourceVector used{};
    for (const auto j : order)
    {
        const auto& a = candidates[j].a;
        bool fits = true;
        for (std::size_t i = 0; i < resource_dims; ++i)
            fits = fits && used[i] + a[i] <= market.b[i];
        if (!fits)
            continue;
        for (std::size_t i = 0; i < resource_dims; ++i)
            used[i] += a[i];
        x[j] = true;
    }
    return x;
}

ResourceVector block_usage(const std::vector<Candidate>& candidates, const std::vector<bool>& x)
{
    ResourceVector used{};
    for (std::size_t j = 0; j < candidates.size() && j < x.size(); ++j)
    {
        if (x[j])
        {
            for (std::size_t i = 0; i < resource_dims; ++i)
                used[i] += candidates[j].a[i];
        }
    }
    return used;
}
}  // namespace rollup_lab
