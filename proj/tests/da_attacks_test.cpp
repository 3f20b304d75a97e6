// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <rollup_lab/blob_market.hpp>
#include <rollup_lab/da_attacks.hpp>
#include <rollup_lab/error.hpp>
#include <cmath>
#include <sstream>

using namespace rollup_lab;

namespace
{
AttackScenario for_blocks(std::uint64_t n)
{
    AttackScenario s;
    s.duration = n;
    return s;
}

AttackScenario with_budget(Money b)
{
    AttackScenario s;
    s.budget = b;
    return s;
}
}  // namespace

TEST(interval_profile, examples)
{
    const L1Params l1;
    const auto scroll = interval_profile(find_rollup("scroll"), l1);
    EXPECT_EQ(scroll.r, 4);
    EXPECT_EQ(scroll.t_blobs, 24);
    EXPECT_EQ(scroll.t_tx, 4);
    EXPECT_EQ(scroll.t_batches, 4);

    const auto linea = interval_profile(find_rollup("linea"), l1, 0);
    EXPECT_EQ(linea.r, 6);
    EXPECT_EQ(linea.t_blobs, 6);
    EXPECT_EQ(linea.t_tx, 12);
    EXPECT_EQ(linea.t_batches, 1);
    EXPECT_EQ(linea.q, 0);

    const auto era = interval_profile(find_rollup("era"), l1);
    EXPECT_EQ(era.t_blobs, 12);
    EXPECT_EQ(era.t_batches, 12);

    const auto arb = interval_profile(find_rollup("arbitrum"), l1);
    EXPECT_EQ(arb.t_blobs, 144);
    EXPECT_EQ(arb.t_batches, 48);
}

TEST(interval_profile, carry_over)
{
    const auto base = find_rollup("base-throttle");
    const L1Params l1;
    auto p = interval_profile(base, l1, 0);
    EXPECT_DOUBLE_EQ(p.t_batches, 6.0 / 7);
    EXPECT_EQ(p.q, 6);
    p = interval_profile(base, l1, p.q);
    EXPECT_DOUBLE_EQ(p.t_batches, 12.0 / 7);
    EXPECT_EQ(p.q, 5);
    EXPECT_LT(p.q, base.max_blobs_per_batch);
    EXPECT_THROW(interval_profile(base, l1, -1), Error);
}

TEST(interval_cost, examples)
{
    const auto scroll = find_rollup("scroll");
    const L1Params l1;
    const auto c = interval_cost(interval_profile(scroll, l1), 1, scroll, l1, gwei(0.2));
    EXPECT_DOUBLE_EQ(c.c_blobs, 4.992e7);
    EXPECT_NEAR(to_eth(c.c_calldata), 0.01193088, 1e-12);
    EXPECT_DOUBLE_EQ(c.c_txs, 4 * 21'000 * gwei(0.239));
    EXPECT_DOUBLE_EQ(c.c_batches, 4 * gwei(75'840));
    EXPECT_EQ(c.total, c.c_blobs + c.c_calldata + c.c_txs + c.c_batches);

    const auto zero = interval_cost(IntervalProfile{}, 1, scroll, l1, gwei(0.2));
    EXPECT_EQ(zero.total, 0);
    EXPECT_EQ(zero.c_batches, 0);
    EXPECT_THROW(interval_cost(IntervalProfile{}, -1, scroll, l1, 0), Error);
}

TEST(dos, optimism_throttle_hour)
{
    // Independent oracle value.
    const auto t = simulate_dos(find_rollup("optimism-throttle"), L1Params{}, for_blocks(300));
    EXPECT_EQ(t.blocks_sustained, 300u);
    EXPECT_NEAR(to_eth(t.total_spent), 0.8160552037, 1e-9);
    EXPECT_FALSE(t.escalating);
    EXPECT_TRUE(cost_is_flat(t));
    EXPECT_NEAR(to_eth(hourly_cost(t, L1Params{})), 0.8160552037, 1e-9);
}

TEST(dos, scroll_two_eth)
{
    const auto scroll = find_rollup("scroll");
    const auto t = simulate_dos(scroll, L1Params{}, with_budget(eth(2)));
    EXPECT_EQ(t.blocks_sustained, 145u);
    EXPECT_TRUE(t.priced_out);
    EXPECT_TRUE(t.escalating);
    EXPECT_EQ(sustainable_blocks(scroll, L1Params{}, eth(2)), 145u);

    L1Params floored;
    floored.blob_floor = gwei(0.1);
    floored.rho_blob_0 = gwei(0.1);
    EXPECT_EQ(sustainable_blocks(scroll, floored, eth(2)), 28u);
}

TEST(dos, records_and_invariants)
{
    const auto t = simulate_dos(find_rollup("base"), L1Params{}, with_budget(eth(5)));
    ASSERT_FALSE(t.records.empty());
    Money previous = 0;
    for (std::size_t i = 0; i < t.records.size(); ++i)
    {
        const auto& r = t.records[i];
        EXPECT_EQ(r.block, i + 1);
        EXPECT_GE(r.cumulative, previous);
        EXPECT_GE(r.backlog, 0);
        EXPECT_EQ(r.cost.total, r.cost.c_blobs + r.cost.c_calldata + r.cost.c_txs + r.cost.c_batches);
        previous = r.cumulative;
    }
    EXPECT_LE(t.total_spent, eth(5));
    EXPECT_EQ(t.total_spent, t.records.back().cumulative);
}

TEST(dos, zero_budget_is_empty)
{
    AttackScenario s;
    s.budget = 0;
    const auto t = simulate_dos(find_rollup("scroll"), L1Params{}, s);
    EXPECT_TRUE(t.records.empty());
    EXPECT_EQ(t.blocks_sustained, 0u);
    EXPECT_EQ(sustainable_blocks(find_rollup("scroll"), L1Params{}, 0), 0u);
}

TEST(dos, unbounded_needs_duration)
{
    EXPECT_THROW(simulate_dos(find_rollup("linea"), L1Params{}, AttackScenario{}), Error);
}

TEST(dos, linear_without_escalation)
{
    const auto linea = find_rollup("linea");
    const auto t = simulate_dos(linea, L1Params{}, for_blocks(500));
    ASSERT_EQ(t.records.size(), 500u);
    const Money step = t.records.front().cost.total;
    for (const auto& r : t.records)
        EXPECT_NEAR(r.cumulative, step * static_cast<double>(r.block), 1e-9 * r.cumulative);

    for (const double b : {0.5, 1.0, 2.0, 4.0, 8.0})
    {
        const auto k = sustainable_blocks(linea, L1Params{}, eth(b));
        EXPECT_NEAR(static_cast<double>(k), std::floor(eth(b) / step), 1) << b;
    }
}

TEST(dos, below_one_interval)
{
    const auto scroll = find_rollup("scroll");
    const L1Params l1;
    const auto first = interval_cost(interval_profile(scroll, l1), 1, scroll, l1, gwei(0.2));
    EXPECT_EQ(sustainable_blocks(scroll, l1, first.total * 0.99), 0u);
    EXPECT_EQ(sustainable_blocks(scroll, l1, first.total * 1.0), 1u);
}

TEST(dos, zero_delay_is_identical)
{
    AttackScenario a = for_blocks(200);
    AttackScenario b = a;
    b.delay = 0;
    const auto x = simulate_dos(find_rollup("scroll"), L1Params{}, a);
    const auto y = delayed_variants(find_rollup("scroll"), L1Params{}, [&] {
        auto s = b;
        s.budget = eth(1e6);
        return s;
    }()).dos;
    ASSERT_EQ(x.records.size(), y.records.size());
    for (std::size_t i = 0; i < x.records.size(); ++i)
    {
        ASSERT_EQ(x.records[i].price, y.records[i].price);
        ASSERT_EQ(x.records[i].cumulative, y.records[i].cumulative);
    }
}

TEST(dos, delay_keeps_cost_bounded)
{
    AttackScenario s = for_blocks(3000);
    s.delay = 20;
    for (const auto& c : builtin_registry())
    {
        const auto t = simulate_dos(c, L1Params{}, s);
        ASSERT_EQ(t.blocks_sustained, 3000u) << c.name;
        double peak = 0;
        for (const auto& r : t.records)
            peak = std::max(peak, r.price);
        EXPECT_LT(peak, std::pow(1.15, 20)) << c.name;
    }
}

TEST(dos, arbitrum_caveat)
{
    const auto t = simulate_dos(find_rollup("arbitrum"), L1Params{}, for_blocks(3));
    EXPECT_FALSE(t.caveat.empty());
    EXPECT_TRUE(simulate_dos(find_rollup("scroll"), L1Params{}, for_blocks(3)).caveat.empty());
}

TEST(dos, csv_columns)
{
    std::ostringstream out;
    write_trajectory_csv(out, simulate_dos(find_rollup("scroll"), L1Params{}, for_blocks(2)));
    std::istringstream in{out.str()};
    std::string header, row;
    std::getline(in, header);
    EXPECT_EQ(header, "block,price_wei,c_blobs,c_calldata,c_txs,c_batches,total,cumulative,backlog");
    std::getline(in, row);
    EXPECT_EQ(row.substr(0, 4), "1,1,");
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
}

TEST(mitigated_dos, cost_grows_faster)
{
    AttackScenario s = for_blocks(300);
    const auto linea = find_rollup("linea");
    const auto plain = simulate_dos(linea, L1Params{}, s);
    const auto mitigated = simulate_dos_mitigated(linea, L1Params{}, s, MitigatedDaPrice{});
    ASSERT_EQ(plain.records.size(), mitigated.records.size());
    double previous_ratio = 1;
    for (std::size_t i = 0; i < plain.records.size(); ++i)
    {
        const double ratio = mitigated.records[i].cumulative / plain.records[i].cumulative;
        EXPECT_GT(mitigated.records[i].cumulative, plain.records[i].cumulative);
        EXPECT_GT(ratio, previous_ratio);
        EXPECT_GE(mitigated.records[i].l2_blob_price, mitigated.records[i].price);
        previous_ratio = ratio;
    }
    // Six full L2 blocks per interval at 1.125 each.
    EXPECT_NEAR(mitigated.records[0].l2_blob_price, std::pow(1.125, 6), 1e-12);
}

TEST(direct_l1, paper_totals)
{
    const L1Params l1;
    EXPECT_EQ(direct_l1_delay(eth(1), l1).total_blocks, 364u);
    EXPECT_EQ(direct_l1_delay(eth(10), l1).total_blocks, 398u);
    EXPECT_EQ(direct_l1_delay(eth(100), l1).total_blocks, 430u);
    EXPECT_NEAR(direct_l1_delay(eth(1), l1).k_l1, 182.95, 0.01);
    EXPECT_THROW(direct_l1_delay(0, l1), Error);
}

TEST(direct_l1, closed_form_matches_simulation)
{
    const L1Params l1;
    for (double e = -4; e <= 3; e += 0.125)
    {
        const auto d = direct_l1_delay(eth(std::pow(10, e)), l1);
        EXPECT_LE(std::abs(static_cast<double>(d.k_blocks) - static_cast<double>(d.simulated_blocks)), 1) << e;
    }
}

TEST(amplified, oracle_totals)
{
    const L1Params l1;
    EXPECT_NEAR(amplified_delay(find_rollup("scroll"), eth(10), l1).total_blocks, 854.703528, 1e-5);
    EXPECT_NEAR(amplified_delay(find_rollup("era"), eth(10), l1).total_blocks, 2292.555084, 1e-5);
    EXPECT_NEAR(amplified_delay(find_rollup("arbitrum"), eth(10), l1).total_blocks, 6576.782722, 1e-4);
    EXPECT_NEAR(amplified_delay(find_rollup("optimism"), eth(10), l1).total_blocks, 530.596928, 1e-5);
    const auto base = amplified_delay(find_rollup("base"), eth(10), l1);
    EXPECT_NEAR(base.total_blocks, 1162.775857, 1e-5);
    EXPECT_NEAR(base.amplification, 1162.775857 / 398, 1e-7);
}

TEST(amplified, not_susceptible)
{
    const auto linea = amplified_delay(find_rollup("linea"), eth(10), L1Params{});
    EXPECT_FALSE(linea.susceptible);
    EXPECT_EQ(linea.t_batches, 1);
    EXPECT_FALSE(amplified_delay(find_rollup("optimism-throttle"), eth(10), L1Params{}).susceptible);
    EXPECT_FALSE(amplified_delay(find_rollup("base-throttle"), eth(10), L1Params{}).susceptible);
}

TEST(amplified, budget_must_cover_an_interval)
{
    EXPECT_THROW(amplified_delay(find_rollup("scroll"), eth(0.001), L1Params{}), Error);
    EXPECT_THROW(amplified_delay(find_rollup("scroll"), unbounded, L1Params{}), Error);
}

TEST(amplified, bisection_properties)
{
    const L1Params l1;
    for (const char* name : {"scroll", "era", "arbitrum", "optimism", "base"})
    {
        double previous_k = 0;
        for (const double b : {0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0})
        {
            const auto a = amplified_delay(find_rollup(name), eth(b), l1);
            ASSERT_TRUE(a.susceptible);
            EXPECT_LT(std::abs(a.residual), a.marginal_cost) << name << " " << b;
            EXPECT_GE(a.k_l1, previous_k);
            EXPECT_LE(std::abs(std::floor(a.k_l1) - static_cast<double>(a.simulated_blocks)), 1) << name << " " << b;
            previous_k = a.k_l1;
        }
    }
}

TEST(amplified, at_least_direct_when_batches_lag)
{
    const L1Params l1;
    for (const auto& rollup : builtin_registry())
    {
        for (const double b : {0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0})
        {
            const auto a = amplified_delay(rollup, eth(b), l1);
            if (a.t_batches > 1)
                EXPECT_GE(a.amplification, 1) << rollup.name << " " << b;
        }
    }
}

TEST(amplified, backlog_accounting)
{
    const L1Params l1;
    for (const char* name : {"scroll", "era", "optimism", "base"})
    {
        const auto rollup = find_rollup(name);
        const auto a = amplified_delay(rollup, eth(10), l1);
        const auto t = amplified_trajectory(rollup, eth(10), l1);
        const auto k = static_cast<std::size_t>(std::floor(a.k_l1));
        ASSERT_GE(t.records.size(), k);
        for (const auto& r : t.records)
            ASSERT_GE(r.backlog, 0);
        EXPECT_DOUBLE_EQ(t.records[k - 1].backlog, static_cast<double>(k) * (a.t_batches - 1)) << name;
        EXPECT_EQ(t.records.back().backlog, 0);
        EXPECT_NEAR(static_cast<double>(t.records.size()), static_cast<double>(k) * (1 + a.t_batches), 1e-9) << name;
    }
}

TEST(delayed, zero_delay_is_identical)
{
    const auto l1 = post_pectra(L1Params{});
    for (const char* name : {"scroll", "era", "base"})
    {
        const auto a = amplified_delay(find_rollup(name), eth(10), l1);
        const auto b = delayed_amplified_delay(find_rollup(name), eth(10), l1, 0);
        EXPECT_EQ(a.total_blocks, b.total_blocks);
        EXPECT_EQ(a.amplification, b.amplification);
    }
}

TEST(delayed, twenty_blocks)
{
    // Independent oracle values under the post-Pectra blob calldata cost.
    const auto l1 = post_pectra(L1Params{});
    EXPECT_NEAR(delayed_amplified_delay(find_rollup("scroll"), eth(10), l1, 20).amplification, 4.23, 0.01);
    EXPECT_NEAR(delayed_amplified_delay(find_rollup("era"), eth(10), l1, 20).amplification, 18.23, 0.01);
    EXPECT_NEAR(delayed_amplified_delay(find_rollup("base"), eth(10), l1, 20).amplification, 4.03, 0.01);
    EXPECT_FALSE(delayed_amplified_delay(find_rollup("linea"), eth(10), l1, 20).susceptible);
}

TEST(econ, ledger)
{
    const auto r = economic_damage(EconParams{});
    EXPECT_NEAR(to_eth(r.intrinsic_hourly), 0.0063, 1e-12);
    EXPECT_NEAR(to_eth(r.calldata_hourly), 0.6240192, 1e-12);
    EXPECT_NEAR(to_eth(r.blob_hourly), 0.0052, 1e-12);
    EXPECT_NEAR(to_eth(r.commit_cost), 0.0042495, 1e-12);
    EXPECT_NEAR(r.commit_cost_usd, 10.62375, 1e-9);
    EXPECT_EQ(r.fees_per_batch_usd, 1.32);
    EXPECT_EQ(r.outlay_per_batch_usd, 10.63);
    EXPECT_EQ(r.loss_per_batch_usd, 9.31);
    EXPECT_EQ(r.loss_hourly_usd, 11172);
    EXPECT_NEAR(r.loss_per_batch_usd, r.outlay_per_batch_usd - r.fees_per_batch_usd, 1e-9);

    EconParams bad;
    bad.tx_per_hour = 0;
    EXPECT_THROW(economic_damage(bad), Error);
}

TEST(econ, text_and_csv)
{
    std::ostringstream text, csv;
    write_econ_text(text, economic_damage(EconParams{}), EconParams{});
    write_econ_csv(csv, economic_damage(EconParams{}));
    EXPECT_NE(text.str().find("$9.31"), std::string::npos);
    EXPECT_NE(text.str().find("$11172.00"), std::string::npos);
    EXPECT_NE(csv.str().find("loss_hourly_usd,11172,usd"), std::string::npos);
}
