// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rollup_lab
{
inline constexpr std::size_t blob_size = 131'072;

struct GasSchedule
{
    double zero_byte_gas = 0;
    double nonzero_byte_gas = 0;
    std::string label;
};

GasSchedule pectra_schedule();
GasSchedule pre_pectra_schedule();
/// "pectra" or "pre-pectra".
GasSchedule schedule_by_name(std::string_view name);

struct Payload
{
    std::vector<std::uint8_t> bytes;
    std::uint64_t seed = 0;
    double zero_ratio = 0;
};

double calldata_gas(std::span<const std::uint8_t> bytes, const GasSchedule& schedule) noexcept;

/// Each byte is zero with probability zero_ratio, otherwise uniform over 1..255.
Payload gen_payload(std::size_t size, double zero_ratio, std::uint64_t seed);

/// Expected gas to write one blob's worth of calldata.
double gas_to_fill_blob(const GasSchedule& schedule, double zero_ratio);

void write_payload(const Payload& payload, const std::filesystem::path& path);

class Compressor
{
public:
    virtual ~Compressor() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// Compressed size in bytes. Throws Error on failure.
    [[nodiscard]] virtual std::size_t compressed_size(std::span<const std::uint8_t> bytes, int quality) const = 0;
};

/// Order-0 entropy bound plus a small frame header. Ignores quality.
class EntropyEstimator final : public Compressor
{
public:
    static constexpr std::size_t header_bytes = 16;
    [[nodiscard]] std::string name() const override { return "entropy"; }
    [[nodiscard]] std::size_t compressed_size(std::span<const std::uint8_t> bytes, int quality) const override;
};

/// "entropy", and "deflate" when built with zlib.
std::unique_ptr<Compressor> make_compressor(std::string_view name);
std::vector<std::string> compressor_names();

double compression_ratio(const Payload& payload, const Compressor& compressor, int quality);

struct CalldataPoint
{
    double zero_ratio = 0;
    int quality = 0;
    double mean_gas = 0;
    double expected_gas = 0;
    double mean_ratio = 0;
};

/// Mean calldata gas and compression ratio over `seeds` payloads seeded
/// first_seed, first_seed + 1, ...
CalldataPoint calldata_sweep_point(const GasSchedule& schedule, const Compressor& compressor, double zero_ratio,
    int quality, std::size_t size, std::uint64_t first_seed, std::uint32_t seeds);
}  // namespace rollup_lab
