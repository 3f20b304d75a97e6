// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <rollup_lab/config.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <random>
#include <sstream>

using namespace rollup_lab;

namespace
{
ScenarioFile parse(const std::string& text)
{
    std::istringstream in{text};
    return parse_scenario(in);
}

ErrorKind error_kind(const std::string& text)
{
    try
    {
        parse(text);
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ErrorKind::io;
}
}  // namespace

TEST(registry, golden_values)
{
    const auto& r = builtin_registry();
    ASSERT_EQ(r.size(), 6u);

    struct Golden
    {
        const char* name;
        double bt_l2, max_blobs;
        std::optional<double> block_limit;
        double tx_to_fill, commit_gwei, l2_gwei;
    };
    const Golden golden[]{
        {"scroll", 3, 6, std::nullopt, 1, 75'840, 0.039},
        {"linea", 2, 6, 1, 2, 400'030, 0.083},
        {"era", 1, 1, std::nullopt, 1, 232'524, 0.045},
        {"arbitrum", 0.25, 3, std::nullopt, 1, 168'858, 0.014},
        {"optimism", 2, 6, 2, 2, 21'000, 0.012},
        {"base", 2, 7, std::nullopt, 1, 21'000, 0.002},
    };
    for (std::size_t i = 0; i < 6; ++i)
    {
        SCOPED_TRACE(golden[i].name);
        EXPECT_EQ(r[i].name, golden[i].name);
        EXPECT_EQ(r[i].bt_l2, golden[i].bt_l2);
        EXPECT_EQ(r[i].max_blobs_per_batch, golden[i].max_blobs);
        EXPECT_EQ(r[i].block_blob_limit, golden[i].block_limit);
        EXPECT_EQ(r[i].tx_to_fill, golden[i].tx_to_fill);
        EXPECT_EQ(r[i].commit_cost_c_batch, golden[i].commit_gwei * 1e9);
        EXPECT_EQ(r[i].l2_base_fee, golden[i].l2_gwei * 1e9);
        EXPECT_EQ(r[i].scalar_blob, 1);
        EXPECT_NO_THROW(validate(r[i]));
    }
}

TEST(registry, same_values_every_call)
{
    const auto first = builtin_registry();
    EXPECT_EQ(&builtin_registry(), &builtin_registry());
    EXPECT_EQ(first, builtin_registry());
}

TEST(registry, arbitrum_carries_caveat)
{
    EXPECT_FALSE(find_rollup("arbitrum").ordering_note.empty());
    EXPECT_TRUE(find_rollup("scroll").ordering_note.empty());
}

TEST(registry, lookup)
{
    EXPECT_EQ(find_rollup("Scroll").name, "scroll");
    EXPECT_EQ(find_rollup("zksync-era").name, "era");
    const auto t = find_rollup("optimism-throttle");
    EXPECT_EQ(t.name, "optimism-throttle");
    EXPECT_EQ(t.block_blob_limit, 1.0);
    EXPECT_EQ(t.tx_to_fill, 2);
    EXPECT_EQ(t.commit_cost_c_batch, find_rollup("optimism").commit_cost_c_batch);
    EXPECT_THROW(find_rollup("nosuch"), Error);
    EXPECT_THROW(find_rollup("-throttle"), Error);
}

TEST(units, round_trip)
{
    std::mt19937_64 rng{7};
    std::uniform_real_distribution<double> exp10{-3, 25};
    for (int i = 0; i < 10'000; ++i)
    {
        const double x = std::pow(10.0, exp10(rng));
        EXPECT_LT(std::abs(eth(to_eth(x)) - x) / x, 1e-9);
        EXPECT_LT(std::abs(gwei(to_gwei(x)) - x) / x, 1e-9);
        EXPECT_LT(std::abs(from_usd(to_usd(x, 2500), 2500) - x) / x, 1e-9);
    }
    EXPECT_EQ(gwei(1), 1e9);
    EXPECT_EQ(eth(1), 1e18);
    EXPECT_EQ(to_usd(eth(2), 2500), 5000);
}

TEST(l1_params, defaults_and_validation)
{
    L1Params l1;
    EXPECT_EQ(l1.bt_l1, 12);
    EXPECT_EQ(l1.blob_target, 6);
    EXPECT_EQ(l1.blob_limit, 9);
    EXPECT_EQ(l1.u_blob, 1.15);
    EXPECT_EQ(l1.rho_blob_0, 1);
    EXPECT_EQ(l1.gas_per_blob_calldata, 2.08e6);
    EXPECT_EQ(l1.gas_per_blob_fill, 5'124'950);
    EXPECT_EQ(l1.intrinsic_tx_gas, 21'000);
    EXPECT_NO_THROW(validate(l1));

    l1.blob_floor = 2;
    try
    {
        validate(l1);
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
        EXPECT_NE(std::string{e.what()}.find("rho_blob_0_wei"), std::string::npos);
    }
    EXPECT_EQ(post_pectra(L1Params{}).gas_per_blob_calldata, 5'124'950);
}

TEST(rollup_config, validation_names_field)
{
    auto r = find_rollup("linea");
    r.block_blob_limit = 7;
    try
    {
        validate(r);
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_NE(std::string{e.what()}.find("block_blob_limit"), std::string::npos);
    }
    r = find_rollup("scroll");
    r.tx_to_fill = 0.5;
    EXPECT_THROW(validate(r), Error);
}

TEST(scenario, defaults)
{
    const auto f = parse("budget_eth = 10\n");
    EXPECT_EQ(f.scenario.budget, eth(10));
    EXPECT_EQ(f.scenario.priority_fee, gwei(0.2));
    EXPECT_EQ(f.scenario.delay, 0u);
    EXPECT_FALSE(f.scenario.duration);
    EXPECT_EQ(f.scenario.eth_usd, 2500);
    EXPECT_TRUE(f.rollup.empty());
}

TEST(scenario, delay)
{
    EXPECT_EQ(parse("delay_blocks = 20").scenario.delay, 20u);
}

TEST(scenario, full_file)
{
    const auto f = parse(
        "# comment line\n"
        "rollup = Base   # trailing comment\n"
        "budget_eth = 2.5\n"
        "priority_fee_gwei = 0.1\n"
        "duration_blocks = 300\n"
        "eth_usd = 3000\n"
        "override.block_blob_limit = 1\n"
        "override.blob_floor_wei = 0.5\n");
    EXPECT_EQ(f.rollup, "base");
    EXPECT_EQ(f.scenario.budget, eth(2.5));
    EXPECT_EQ(f.scenario.priority_fee, gwei(0.1));
    EXPECT_EQ(f.scenario.duration, 300u);
    EXPECT_EQ(f.scenario.eth_usd, 3000);

    RollupConfig r;
    L1Params l1;
    f.resolve(r, l1);
    EXPECT_EQ(r.block_blob_limit, 1.0);
    EXPECT_EQ(l1.blob_floor, 0.5);
}

TEST(scenario, errors)
{
    EXPECT_EQ(error_kind("budget_eth = -1"), ErrorKind::validation);
    EXPECT_EQ(error_kind("budget_eth = 0"), ErrorKind::validation);
    EXPECT_EQ(error_kind("budget_eth = ten"), ErrorKind::parse);
    EXPECT_EQ(error_kind("budget = 1"), ErrorKind::parse);
    EXPECT_EQ(error_kind("override.nosuch = 1"), ErrorKind::parse);
    EXPECT_EQ(error_kind("override.decay = sometimes"), ErrorKind::parse);
    EXPECT_EQ(error_kind("just text"), ErrorKind::parse);
    EXPECT_EQ(error_kind("budget_eth = 1\nbudget_eth = 2"), ErrorKind::parse);
    EXPECT_EQ(error_kind("delay_blocks = 2.5"), ErrorKind::validation);
    EXPECT_EQ(error_kind("rollup = nosuch"), ErrorKind::not_found);
}

TEST(scenario, resolve_validates_overrides)
{
    const auto f = parse("rollup = linea\noverride.block_blob_limit = 9\n");
    RollupConfig r;
    L1Params l1;
    EXPECT_THROW(f.resolve(r, l1), Error);
    EXPECT_THROW(parse("budget_eth = 1").resolve(r, l1), Error);
    EXPECT_NO_THROW(parse("budget_eth = 1").resolve(r, l1, "scroll"));
    EXPECT_EQ(r.name, "scroll");
}

TEST(scenario, key_order_does_not_matter)
{
    std::vector<std::string> lines{"rollup = era", "budget_eth = 3", "delay_blocks = 64",
        "override.u_blob = 1.125", "override.bt_l2 = 2", "eth_usd = 1800", "priority_fee_gwei = 0"};
    std::string text;
    for (const auto& l : lines)
        text += l + "\n";
    const auto reference = parse(text);
    std::mt19937 rng{3};
    for (int i = 0; i < 50; ++i)
    {
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string shuffled;
        for (const auto& l : lines)
            shuffled += l + "\n";
        EXPECT_EQ(parse(shuffled), reference);
    }
}

TEST(overrides, all_fields_accept_values)
{
    for (const auto& field : override_fields())
    {
        RollupConfig r = find_rollup("scroll");
        L1Params l1;
        const char* value = field == "decay" ? "fixed" : field == "block_blob_limit" ? "none" : "0.5";
        EXPECT_NO_THROW(apply_override(r, l1, field, value)) << field;
    }
    RollupConfig r;
    L1Params l1;
    EXPECT_THROW(apply_override(r, l1, "nosuch", "1"), Error);
    apply_override(r, l1, "commit_cost_gwei", "100");
    EXPECT_EQ(r.commit_cost_c_batch, gwei(100));
}

TEST(scenario, missing_file_is_io_error)
{
    try
    {
        load_scenario("/nonexistent/scenario.txt");
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::io);
    }
}
