// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/blob_market.hpp>
#include <rollup_lab/csv.hpp>
#include <rollup_lab/da_attacks.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <cmath>
#include <ostream>

namespace rollup_lab
{
namespace
{
constexpr std::uint64_t max_intervals = 50'000'000;
constexpr double eps = 1e-9;

/// Whole batches sealed after n intervals; a partly filled batch takes a
/// commit slot once sealed.
double sealed_batches(double t_batches, std::uint64_t n)
{
    return std::ceil(t_batches * static_cast<double>(n) - eps);
}

/// Number of L2 blocks starting inside L1 interval i.
std::uint64_t l2_blocks_in_interval(const RollupConfig& rollup, const L1Params& l1, std::uint64_t i)
{
    const auto first = [&](std::uint64_t n) {
        return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) * l1.bt_l1 / rollup.bt_l2 - eps));
    };
    return first(i + 1) - first(i);
}

AttackTrajectory run_dos(const RollupConfig& rollup, const L1Params& l1, const AttackScenario& scenario,
    bool others_fill, const std::optional<MitigatedDaPrice>& mitigation)
{
    validate(rollup);
    validate(l1);
    AttackTrajectory t;
    t.rollup = rollup.name;
    t.caveat = rollup.ordering_note;
    t.delay = scenario.delay;
    if (!(scenario.budget > 0))
        return t;
    validate(scenario);
    if (!scenario.duration && std::isinf(scenario.budget))
        throw Error{ErrorKind::invalid_argument, "an unbounded budget needs a duration"};

    const auto profile = interval_profile(rollup, l1, 0);
    t.escalating = others_fill ? profile.t_blobs >= 1 : profile.t_blobs > l1.blob_target;
    const double per_block = rollup.block_blob_limit ?
                                 std::min(*rollup.block_blob_limit, rollup.max_blobs_per_batch) :
                                 rollup.max_blobs_per_batch;
    const double capacity = rollup.block_blob_limit.value_or(rollup.max_blobs_per_batch);

    BlobMarket market{l1, others_fill};
    std::optional<MitigatedDaPrice> l2_price = mitigation;
    if (l2_price)
        l2_price->rho_l2_blob = std::max(l2_price->rho_l2_blob, l1.rho_blob_0);

    const std::uint64_t limit = scenario.duration.value_or(max_intervals);
    Money cumulative = 0;
    double backlog = 0;
    for (std::uint64_t i = 0; i < limit; ++i)
    {
        const Money view = market.delayed_view(scenario.delay);
        auto cost = interval_cost(profile, view, rollup, l1, scenario.priority_fee);
        std::optional<MitigatedDaPrice> next_l2 = l2_price;
        if (next_l2)
        {
            Money c_blobs = 0;
            const auto blocks = l2_blocks_in_interval(rollup, l1, i);
            for (std::uint64_t j = 0; j < blocks; ++j)
            {
                c_blobs += per_block * l1.gas_per_blob_calldata * rollup.scalar_blob * next_l2->rho_l2_blob;
                *next_l2 = mitigated_da_step(*next_l2, per_block, capacity, view);
            }
            cost.c_blobs = c_blobs;
            cost.total = cost.c_blobs + cost.c_calldata + cost.c_txs + cost.c_batches;
        }
        if (cumulative + cost.total > scenario.budget)
        {
            t.priced_out = true;
            break;
        }
        cumulative += cost.total;
        l2_price = next_l2;

        const bool gated = scenario.delay > 0 && market.current_price() > view;
        const double committed = sealed_batches(profile.t_batches, i + 1) - sealed_batches(profile.t_batches, i);
        backlog = gated ? backlog + committed : 0;

        IntervalRecord rec;
        rec.block = i + 1;
        rec.price = view;
        rec.cost = cost;
        rec.cumulative = cumulative;
        rec.blobs_posted = gated ? 0 : profile.t_blobs;
        rec.batches_committed = committed;
        rec.backlog = backlog;
        rec.l2_blob_price = l2_price ? l2_price->rho_l2_blob : 0;
        t.records.push_back(rec);

        market.step(rec.blobs_posted);
    }
    if (!scenario.duration && !t.priced_out)
        throw Error{ErrorKind::invalid_argument, "budget sustains more than the simulation limit"};
    t.blocks_sustained = t.records.size();
    t.total_spent = cumulative;
    return t;
}

void check_budget(Money budget)
{
    if (!(budget > 0) || std::isinf(budget))
        throw Error{ErrorKind::invalid_argument, "budget must be positive and finite"};
}

AmplifiedDelay amplified_common(const RollupConfig& rollup, Money budget, const L1Params& l1, Money delta,
    IntervalProfile& profile, CostBreakdown& first)
{
    validate(rollup);
    validate(l1);
    check_budget(budget);
    profile = interval_profile(rollup, l1, 0);
    first = interval_cost(profile, l1.rho_blob_0, rollup, l1, delta);
    AmplifiedDelay a;
    a.budget = budget;
    a.t_batches = profile.t_batches;
    a.susceptible = profile.t_batches > 1;
    return a;
}
}  // namespace

IntervalProfile interval_profile(const RollupConfig& rollup, const L1Params& l1, double q_in)
{
    if (q_in < 0)
        throw Error{ErrorKind::invalid_argument, "carry-over must be non-negative"};
    IntervalProfile p;
    p.r = l1.bt_l1 / rollup.bt_l2;
    const double batch = rollup.max_blobs_per_batch;
    if (rollup.block_blob_limit)
    {
        const double block_limit = *rollup.block_blob_limit;
        p.t_blobs = p.r * std::min(block_limit, batch);
        const double filled = q_in + p.r * block_limit;
        p.t_batches = filled / batch;
        p.q = std::fmod(filled, batch);
    }
    else
    {
        p.t_blobs = p.r * batch;
        p.t_batches = p.r;
    }
    p.t_tx = p.r * std::max(1.0, rollup.tx_to_fill);
    return p;
}

CostBreakdown interval_cost(
    const IntervalProfile& profile, Money rho_blob, const RollupConfig& rollup, const L1Params& l1, Money delta)
{
    if (rho_blob < 0)
        throw Error{ErrorKind::invalid_argument, "blob price must be non-negative"};
    const Money l2_price = rollup.l2_base_fee + delta;
    CostBreakdown c;
    c.c_blobs = profile.t_blobs * l1.gas_per_blob_calldata * rho_blob * rollup.scalar_blob;
    c.c_calldata = profile.t_blobs * l1.gas_per_blob_calldata * l2_price;
    c.c_txs = profile.t_tx * l1.intrinsic_tx_gas * l2_price;
    c.c_batches = profile.t_batches * rollup.commit_cost_c_batch;
    c.total = c.c_blobs + c.c_calldata + c.c_txs + c.c_batches;
    return c;
}

AttackTrajectory simulate_dos(
    const RollupConfig& rollup, const L1Params& l1, const AttackScenario& scenario, bool others_fill)
{
    return run_dos(rollup, l1, scenario, others_fill, std::nullopt);
}

AttackTrajectory simulate_dos_mitigated(const RollupConfig& rollup, const L1Params& l1,
    const AttackScenario& scenario, const MitigatedDaPrice& mitigation)
{
    return run_dos(rollup, l1, scenario, false, mitigation);
}

std::uint64_t sustainable_blocks(const RollupConfig& rollup, const L1Params& l1, Money budget, Money delta)
{
    if (!(budget > 0))
        return 0;
    check_budget(budget);
    AttackScenario s;
    s.budget = budget;
    s.priority_fee = delta;
    return simulate_dos(rollup, l1, s).blocks_sustained;
}

bool cost_is_flat(const AttackTrajectory& trajectory, double rel_tol)
{
    if (trajectory.records.empty())
        return true;
    const Money first = trajectory.records.front().cost.total;
    return std::all_of(trajectory.records.begin(), trajectory.records.end(), [&](const IntervalRecord& r) {
        return std::abs(r.cost.total - first) <= rel_tol * std::abs(first);
    });
}

Money hourly_cost(const AttackTrajectory& trajectory, const L1Params& l1)
{
    const auto n = static_cast<std::size_t>(std::llround(3600.0 / l1.bt_l1));
    if (trajectory.records.size() < n || n == 0)
        throw Error{ErrorKind::invalid_argument, "trajectory is shorter than one hour"};
    return trajectory.records[n - 1].cumulative;
}

DirectDelay direct_l1_delay(Money budget, const L1Params& l1)
{
    validate(l1);
    check_budget(budget);
    const Money c0 = l1.blob_limit * l1.blob_gas_per_blob * l1.rho_blob_0;
    DirectDelay d;
    d.budget = budget;
    d.k_l1 = std::log((l1.u_blob - 1) * budget / c0 + 1) / std::log(l1.u_blob);
    d.k_blocks = static_cast<std::uint64_t>(std::floor(d.k_l1));
    d.total_blocks = 2 * d.k_blocks;

    BlobMarket market{l1, true};
    Money spent = 0;
    while (d.simulated_blocks < max_intervals)
    {
        const Money c = l1.blob_limit * l1.blob_gas_per_blob * market.current_price();
        if (spent + c > budget)
            break;
        spent += c;
        market.step(l1.blob_limit);
        ++d.simulated_blocks;
    }
    return d;
}

AmplifiedDelay amplified_delay(const RollupConfig& rollup, Money budget, const L1Params& l1, Money delta)
{
    IntervalProfile profile;
    CostBreakdown first;
    auto a = amplified_common(rollup, budget, l1, delta, profile, first);
    if (!a.susceptible)
        return a;

    const Money b_rho = first.c_blobs;
    const Money c_const = first.c_calldata + first.c_txs + first.c_batches;
    if (!(budget > c_const))
        throw Error{ErrorKind::invalid_argument, "budget does not cover one interval"};
    const double u = l1.u_blob;
    const auto spend = [&](double k) { return b_rho * (std::pow(u, k) - 1) / (u - 1) + c_const * k; };

    double lo = 0;
    double hi = 1;
    while (spend(hi) < budget)
    {
        lo = hi;
        hi *= 2;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i)
    {
        const double mid = (lo + hi) / 2;
        (spend(mid) < budget ? lo : hi) = mid;
    }
    a.k_l1 = (lo + hi) / 2;
    a.residual = spend(a.k_l1) - budget;
    a.marginal_cost = b_rho * std::pow(u, a.k_l1) + c_const;
    a.total_blocks = a.k_l1 * (1 + a.t_batches);
    a.amplification = a.total_blocks / static_cast<double>(direct_l1_delay(budget, l1).total_blocks);

    BlobMarket market{l1, true};
    Money spent = 0;
    while (a.simulated_blocks < max_intervals)
    {
        const auto c = interval_cost(profile, market.current_price(), rollup, l1, delta);
        if (spent + c.total > budget)
            break;
        spent += c.total;
        market.step(profile.t_blobs);
        ++a.simulated_blocks;
    }
    return a;
}

AmplifiedDelay delayed_amplified_delay(
    const RollupConfig& rollup, Money budget, const L1Params& l1, std::uint32_t d, Money delta)
{
    if (d == 0)
        return amplified_delay(rollup, budget, l1, delta);
    IntervalProfile profile;
    CostBreakdown first;
    auto a = amplified_common(rollup, budget, l1, delta, profile, first);
    a.delay = d;
    if (!a.susceptible)
        return a;

    BlobMarket market{l1, true};
    Money spent = 0;
    std::uint64_t n = 0;
    for (;; ++n)
    {
        if (n >= max_intervals)
            throw Error{ErrorKind::invalid_argument, "budget sustains more than the simulation limit"};
        const Money view = market.delayed_view(d);
        const auto c = interval_cost(profile, view, rollup, l1, delta);
        if (!(c.total > 0))
            throw Error{ErrorKind::invalid_argument, "interval cost is zero"};
        if (spent + c.total > budget)
        {
            a.k_l1 = static_cast<double>(n) + (budget - spent) / c.total;
            a.residual = spent - budget;
            a.marginal_cost = c.total;
            break;
        }
        spent += c.total;
        market.step(market.current_price() > view ? 0 : profile.t_blobs);
    }
    a.simulated_blocks = n;
    a.total_blocks = a.k_l1 * (1 + a.t_batches);
    a.amplification = a.total_blocks / static_cast<double>(direct_l1_delay(budget, l1).total_blocks);
    return a;
}

AttackTrajectory amplified_trajectory(const RollupConfig& rollup, Money budget, const L1Params& l1, Money delta)
{
    const auto a = amplified_delay(rollup, budget, l1, delta);
    const auto profile = interval_profile(rollup, l1, 0);
    AttackTrajectory t;
    t.rollup = rollup.name;
    t.caveat = rollup.ordering_note;
    t.escalating = true;
    const auto k = a.susceptible ? static_cast<std::uint64_t>(std::floor(a.k_l1)) : a.simulated_blocks;

    BlobMarket market{l1, true};
    Money cumulative = 0;
    double finalized = 0;
    std::uint64_t block = 0;
    auto push = [&](const CostBreakdown& c, double posted, double committed, double backlog) {
        IntervalRecord rec;
        rec.block = ++block;
        rec.price = market.current_price();
        rec.cost = c;
        rec.cumulative = cumulative;
        rec.blobs_posted = posted;
        rec.batches_committed = committed;
        rec.backlog = backlog;
        t.records.push_back(rec);
    };

    // Attack: each block commits T_batches and finalizes at most one.
    for (std::uint64_t i = 0; i < k; ++i)
    {
        const auto c = interval_cost(profile, market.current_price(), rollup, l1, delta);
        cumulative += c.total;
        const double committed_total = sealed_batches(profile.t_batches, i + 1);
        const double committed = committed_total - sealed_batches(profile.t_batches, i);
        finalized = std::min(finalized + 1, committed_total);
        push(c, profile.t_blobs, committed, committed_total - finalized);
        market.step(profile.t_blobs);
    }
    t.blocks_sustained = k;
    t.total_spent = cumulative;
    double backlog = t.records.empty() ? 0 : t.records.back().backlog;

    // Cool-down: the price falls back before the backlog can be posted.
    for (std::uint64_t i = 0; i < k && backlog > 0; ++i)
    {
        market.step(0);
        push({}, 0, 0, backlog);
    }
    // Drain one batch per block.
    while (backlog > 0)
    {
        backlog = std::max(0.0, backlog - 1);
        market.step(0);
        push({}, 0, 0, backlog);
    }
    return t;
}

DelayedReport delayed_variants(const RollupConfig& rollup, const L1Params& l1, const AttackScenario& scenario)
{
    DelayedReport r;
    r.dos = simulate_dos(rollup, l1, scenario);
    r.finality = delayed_amplified_delay(rollup, scenario.budget, l1, scenario.delay, scenario.priority_fee);
    return r;
}

EconDamageReport economic_damage(const EconParams& p)
{
    if (!(p.tx_per_hour > 0 && p.batches_per_hour > 0 && p.eth_usd > 0))
        throw Error{ErrorKind::invalid_argument, "rates must be positive"};
    if (p.intrinsic_gas < 0 || p.calldata_gas_per_tx < 0 || p.l2_gas_price < 0 || p.blob_fee_per_tx < 0 ||
        p.commit_gas < 0 || p.l1_gas_price < 0)
        throw Error{ErrorKind::invalid_argument, "gas figures and prices must be non-negative"};
    EconDamageReport r;
    r.intrinsic_per_tx = p.intrinsic_gas * p.l2_gas_price;
    r.calldata_per_tx = p.calldata_gas_per_tx * p.l2_gas_price;
    r.blob_per_tx = p.blob_fee_per_tx;
    r.intrinsic_hourly = r.intrinsic_per_tx * p.tx_per_hour;
    r.calldata_hourly = r.calldata_per_tx * p.tx_per_hour;
    r.blob_hourly = r.blob_per_tx * p.tx_per_hour;
    r.attacker_hourly = r.intrinsic_hourly + r.calldata_hourly + r.blob_hourly;
    r.attacker_hourly_usd = to_usd(r.attacker_hourly, p.eth_usd);
    r.commit_cost = p.commit_gas * p.l1_gas_price;
    r.commit_cost_usd = to_usd(r.commit_cost, p.eth_usd);

    const double tx_per_batch = p.tx_per_hour / p.batches_per_hour;
    r.fees_per_batch_usd = round_cents(r.attacker_hourly_usd / p.batches_per_hour);
    r.outlay_per_batch_usd = round_cents(r.commit_cost_usd + to_usd(r.blob_per_tx * tx_per_batch, p.eth_usd));
    r.loss_per_batch_usd = round_cents(r.outlay_per_batch_usd - r.fees_per_batch_usd);
    r.loss_hourly_usd = round_cents(r.loss_per_batch_usd * p.batches_per_hour);
    return r;
}

void write_trajectory_csv(std::ostream& out, const AttackTrajectory& t)
{
    out << "block,price_wei,c_blobs,c_calldata,c_txs,c_batches,total,cumulative,backlog\n";
    for (const auto& r : t.records)
    {
        out << r.block << ',' << format_number(r.price) << ',' << format_number(r.cost.c_blobs) << ','
            << format_number(r.cost.c_calldata) << ',' << format_number(r.cost.c_txs) << ','
            << format_number(r.cost.c_batches) << ',' << format_number(r.cost.total) << ','
            << format_number(r.cumulative) << ',' << format_number(r.backlog) << '\n';
    }
}

void write_econ_csv(std::ostream& out, const EconDamageReport& r)
{
    out << "item,value,unit\n";
    const auto row = [&](const char* item, double v, const char* unit) {
        out << item << ',' << format_number(v) << ',' << unit << '\n';
    };
    row("intrinsic_per_tx", r.intrinsic_per_tx, "wei");
    row("calldata_per_tx", r.calldata_per_tx, "wei");
    row("blob_per_tx", r.blob_per_tx, "wei");
    row("intrinsic_hourly", r.intrinsic_hourly, "wei");
    row("calldata_hourly", r.calldata_hourly, "wei");
    row("blob_hourly", r.blob_hourly, "wei");
    row("attacker_hourly", r.attacker_hourly, "wei");
    row("attacker_hourly_usd", r.attacker_hourly_usd, "usd");
    row("commit_cost", r.commit_cost, "wei");
    row("commit_cost_usd", r.commit_cost_usd, "usd");
    row("fees_per_batch_usd", r.fees_per_batch_usd, "usd");
    row("outlay_per_batch_usd", r.outlay_per_batch_usd, "usd");
    row("loss_per_batch_usd", r.loss_per_batch_usd, "usd");
    row("loss_hourly_usd", r.loss_hourly_usd, "usd");
}

void write_econ_text(std::ostream& out, const EconDamageReport& r, const EconParams& p)
{
    const auto eth4 = [](Money w) { return format_fixed(to_eth(w), 4); };
    const auto usd = [](double v) { return "$" + format_fixed(v, 2); };
    out << "Attacker cost for one hour (" << format_number(p.tx_per_hour) << " tx)\n"
        << "  intrinsic gas  " << eth4(r.intrinsic_hourly) << " ETH (" << usd(to_usd(r.intrinsic_hourly, p.eth_usd))
        << ")\n"
        << "  calldata gas   " << eth4(r.calldata_hourly) << " ETH (" << usd(to_usd(r.calldata_hourly, p.eth_usd))
        << ")\n"
        << "  blob fee       " << eth4(r.blob_hourly) << " ETH (" << usd(to_usd(r.blob_hourly, p.eth_usd)) << ")\n"
        << "  total          " << eth4(r.attacker_hourly) << " ETH (" << usd(r.attacker_hourly_usd) << ")\n"
        << "Protocol, per batch\n"
        << "  commit tx      " << format_fixed(to_eth(r.commit_cost), 7) << " ETH (" << usd(r.commit_cost_usd) << ")\n"
        << "  outlay         " << usd(r.outlay_per_batch_usd) << "\n"
        << "  fees collected " << usd(r.fees_per_batch_usd) << "\n"
        << "  net loss       " << usd(r.loss_per_batch_usd) << "\n"
        << "Net loss per hour " << usd(r.loss_hourly_usd) << "\n";
}
}  // namespace rollup_lab
