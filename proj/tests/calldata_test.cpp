// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <rollup_lab/calldata.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

using namespace rollup_lab;

namespace
{
std::vector<std::uint8_t> with_zeros(std::size_t size, std::size_t zeros)
{
    std::vector<std::uint8_t> v(size, 0xab);
    std::fill_n(v.begin(), zeros, 0);
    return v;
}
}  // namespace

TEST(calldata, schedules)
{
    EXPECT_EQ(pectra_schedule().zero_byte_gas, 10);
    EXPECT_EQ(pectra_schedule().nonzero_byte_gas, 40);
    EXPECT_EQ(pre_pectra_schedule().zero_byte_gas, 4);
    EXPECT_EQ(pre_pectra_schedule().nonzero_byte_gas, 16);
    EXPECT_EQ(schedule_by_name("pre-pectra").label, "pre-pectra");
    EXPECT_THROW(schedule_by_name("berlin"), Error);
}

TEST(calldata, gas_examples)
{
    EXPECT_EQ(calldata_gas({}, pectra_schedule()), 0);
    EXPECT_EQ(calldata_gas(with_zeros(blob_size, 1'424), pre_pectra_schedule()), 2'080'064);
    const double g = calldata_gas(with_zeros(blob_size, 3'932), pectra_schedule());
    EXPECT_EQ(g, 3'932 * 10 + (blob_size - 3'932) * 40);
    EXPECT_LT(std::abs(g - 5'124'950) / 5'124'950, 0.0005);
}

TEST(calldata, gas_to_fill_blob)
{
    EXPECT_NEAR(gas_to_fill_blob(pectra_schedule(), 0.03), 5'124'915.2, 1e-6);
    EXPECT_LT(std::abs(gas_to_fill_blob(pectra_schedule(), 0.03) - 5'124'950) / 5'124'950, 1e-4);
    EXPECT_EQ(gas_to_fill_blob(pectra_schedule(), 0), 5'242'880);
    EXPECT_EQ(gas_to_fill_blob(pre_pectra_schedule(), 0), 2'097'152);
    EXPECT_THROW(gas_to_fill_blob(pectra_schedule(), 1.5), Error);
}

TEST(calldata, gas_is_linear_and_order_free)
{
    std::mt19937_64 rng{21};
    for (int i = 0; i < 100; ++i)
    {
        auto p = gen_payload(1 + rng() % 5000, 0.3, rng()).bytes;
        const double g = calldata_gas(p, pectra_schedule());
        std::shuffle(p.begin(), p.end(), rng);
        ASSERT_EQ(calldata_gas(p, pectra_schedule()), g);
        auto twice = p;
        twice.insert(twice.end(), p.begin(), p.end());
        ASSERT_EQ(calldata_gas(twice, pectra_schedule()), 2 * g);
    }
}

TEST(payload, determinism)
{
    EXPECT_TRUE(gen_payload(0, 0.03, 1).bytes.empty());
    const auto a = gen_payload(10'000, 0.03, 42);
    const auto b = gen_payload(10'000, 0.03, 42);
    EXPECT_EQ(a.bytes, b.bytes);
    EXPECT_NE(a.bytes, gen_payload(10'000, 0.03, 43).bytes);
    EXPECT_EQ(a.seed, 42u);
    EXPECT_THROW(gen_payload(1, -0.1, 0), Error);
}

TEST(payload, frozen_prefix)
{
    // Pins the byte stream so payload files stay reproducible across builds.
    const std::vector<std::uint8_t> expected{243, 0, 36, 0, 230, 0, 193, 101};
    EXPECT_EQ(gen_payload(8, 0.5, 7).bytes, expected);
}

TEST(payload, zero_count_binomial)
{
    const double mean = 0.03 * blob_size;
    const double sd = std::sqrt(blob_size * 0.03 * 0.97);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const auto p = gen_payload(blob_size, 0.03, seed);
        const auto zeros = static_cast<double>(std::count(p.bytes.begin(), p.bytes.end(), 0));
        EXPECT_LT(std::abs(zeros - mean), 4 * sd) << seed;
    }
    const auto all = gen_payload(1000, 1, 0);
    EXPECT_EQ(std::count(all.bytes.begin(), all.bytes.end(), 0), 1000);
    const auto none = gen_payload(1000, 0, 0);
    EXPECT_EQ(std::count(none.bytes.begin(), none.bytes.end(), 0), 0);
}

TEST(payload, mean_gas_matches_expectation)
{
    for (const double ratio : {0.0, 0.03, 0.25, 0.5})
    {
        double sum = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed)
            sum += calldata_gas(gen_payload(blob_size, ratio, seed).bytes, pectra_schedule());
        const double expected = gas_to_fill_blob(pectra_schedule(), ratio);
        EXPECT_LT(std::abs(sum / 100 - expected) / expected, 0.001) << ratio;
    }
}

TEST(payload, write_file)
{
    const auto path = std::filesystem::temp_directory_path() / "rollup_lab_payload_test.bin";
    const auto p = gen_payload(1000, 0.1, 9);
    write_payload(p, path);
    EXPECT_EQ(std::filesystem::file_size(path), 1000u);
    std::ifstream in{path, std::ios::binary};
    std::vector<std::uint8_t> back(1000);
    in.read(reinterpret_cast<char*>(back.data()), 1000);
    EXPECT_EQ(back, p.bytes);
    std::filesystem::remove(path);
    EXPECT_THROW(write_payload(p, "/nonexistent/dir/x.bin"), Error);
}

TEST(compression, entropy_estimator)
{
    const EntropyEstimator est;
    for (const int q : {0, 5, 11})
    {
        EXPECT_LT(compression_ratio(gen_payload(blob_size, 1, 0), est, q), 0.01);
        EXPECT_GT(compression_ratio(gen_payload(blob_size, 0.03, 0), est, q), 0.95);
    }
    // Order-0 entropy of 3% zeros, rest uniform over 255 values.
    const double h = -(0.03 * std::log2(0.03) + 0.97 * std::log2(0.97 / 255));
    EXPECT_NEAR(compression_ratio(gen_payload(blob_size, 0.03, 1), est, 0), h / 8, 0.002);
    EXPECT_THROW(compression_ratio(Payload{}, est, 0), Error);
}

TEST(compression, ratio_falls_with_zero_ratio)
{
    for (const auto& name : compressor_names())
    {
        const auto c = make_compressor(name);
        double previous = 2;
        for (const double ratio : {0.0, 0.03, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0})
        {
            const auto pt = calldata_sweep_point(pectra_schedule(), *c, ratio, 6, 16'384, 0, 100);
            EXPECT_LE(pt.mean_ratio, previous) << name << " at " << ratio;
            EXPECT_GT(pt.mean_ratio, 0);
            EXPECT_LE(pt.mean_ratio, 1.1);
            previous = pt.mean_ratio;
        }
    }
    EXPECT_THROW(make_compressor("brotli-xl"), Error);
}

TEST(compression, sweep_point_means)
{
    const EntropyEstimator est;
    const auto pt = calldata_sweep_point(pectra_schedule(), est, 0.03, 11, blob_size, 0, 100);
    EXPECT_NEAR(pt.expected_gas, 5'124'915.2, 1e-6);
    EXPECT_LT(std::abs(pt.mean_gas - pt.expected_gas) / pt.expected_gas, 0.001);
    EXPECT_GT(pt.mean_ratio, 0.95);
    EXPECT_THROW(calldata_sweep_point(pectra_schedule(), est, 0.03, 0, blob_size, 0, 0), Error);
}
