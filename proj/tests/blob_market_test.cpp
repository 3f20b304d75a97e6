// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <rollup_lab/blob_market.hpp>
#include <rollup_lab/error.hpp>
#include <cmath>
#include <random>

using namespace rollup_lab;

TEST(blob_market, step_examples)
{
    BlobMarket m{L1Params{}};
    m.step(9);
    EXPECT_DOUBLE_EQ(m.current_price(), 1.15);

    BlobMarket at_target{L1Params{}};
    at_target.step(6);
    EXPECT_EQ(at_target.current_price(), 1);

    m.step(0);
    EXPECT_DOUBLE_EQ(m.current_price(), 1.0);
    EXPECT_EQ(m.history().size(), 2u);
    EXPECT_THROW(m.step(-1), Error);
}

TEST(blob_market, decay_rules)
{
    L1Params l1;
    l1.decay = DecayRule::fixed;
    BlobMarket fixed{l1};
    fixed.step(9);
    fixed.step(0);
    EXPECT_DOUBLE_EQ(fixed.current_price(), 1.15 * 0.85);

    l1.decay = DecayRule::off;
    BlobMarket off{l1};
    off.step(9);
    off.step(0);
    EXPECT_DOUBLE_EQ(off.current_price(), 1.15);
}

TEST(blob_market, floor_holds)
{
    L1Params l1;
    l1.rho_blob_0 = 100;
    l1.blob_floor = 90;
    BlobMarket m{l1};
    for (int i = 0; i < 10; ++i)
        m.step(0);
    EXPECT_EQ(m.current_price(), 90);

    std::mt19937_64 rng{1};
    std::uniform_int_distribution<int> blobs{0, 9};
    for (int i = 0; i < 5'000; ++i)
    {
        m.step(blobs(rng));
        ASSERT_GE(m.current_price(), l1.blob_floor);
        ASSERT_GT(m.current_price(), 0);
    }
}

TEST(blob_market, others_fill_mode)
{
    BlobMarket alone{L1Params{}};
    alone.step(1);
    EXPECT_EQ(alone.current_price(), 1);

    BlobMarket filled{L1Params{}, true};
    filled.step(1);
    EXPECT_DOUBLE_EQ(filled.current_price(), 1.15);
    filled.step(0);
    EXPECT_DOUBLE_EQ(filled.current_price(), 1.0);
}

TEST(blob_market, closed_form)
{
    const L1Params l1;
    EXPECT_EQ(closed_form_price(l1, 0), 1);
    EXPECT_DOUBLE_EQ(closed_form_price(l1, 1), 1.15);
    EXPECT_THROW(closed_form_price(l1, -1), Error);

    BlobMarket m{l1};
    for (int k = 1; k <= 600; ++k)
    {
        m.step(9);
        const double exact = closed_form_price(l1, k);
        ASSERT_LT(std::abs(m.current_price() - exact) / exact, 1e-9) << k;
    }
}

TEST(blob_market, delayed_view)
{
    BlobMarket m{L1Params{}};
    EXPECT_EQ(m.delayed_view(0), m.current_price());
    for (int i = 0; i < 20; ++i)
        m.step(9);
    EXPECT_EQ(m.delayed_view(20), 1);
    EXPECT_EQ(m.delayed_view(0), m.current_price());
    for (int i = 0; i < 5; ++i)
        m.step(9);
    EXPECT_NEAR(m.delayed_view(20), std::pow(1.15, 5), 1e-12);
    EXPECT_EQ(m.delayed_view(100), 1);
}

TEST(blob_market, delayed_view_tracks_history_position)
{
    BlobMarket m{L1Params{}};
    std::mt19937_64 rng{2};
    std::uniform_int_distribution<int> blobs{0, 9};
    for (int i = 0; i < 300; ++i)
        m.step(blobs(rng));
    const auto& h = m.history();
    for (std::uint32_t d = 1; d < 300; ++d)
        ASSERT_EQ(m.delayed_view(d), h[h.size() - 1 - d]);
    EXPECT_EQ(m.delayed_view(300), m.initial_price());
}
