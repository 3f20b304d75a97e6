// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/calldata.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>

#ifdef ROLLUP_LAB_HAVE_ZLIB
#include <zlib.h>
#endif

namespace rollup_lab
{
namespace
{
#ifdef ROLLUP_LAB_HAVE_ZLIB
class DeflateCompressor final : public Compressor
{
public:
    [[nodiscard]] std::string name() const override { return "deflate"; }

    [[nodiscard]] std::size_t compressed_size(std::span<const std::uint8_t> bytes, int quality) const override
    {
        const int level = std::clamp(quality, 0, 9);
        uLongf size = compressBound(static_cast<uLong>(bytes.size()));
        std::vector<Bytef> out(size);
        const auto rc = compress2(out.data(), &size, bytes.data(), static_cast<uLong>(bytes.size()), level);
        if (rc != Z_OK)
            throw Error{ErrorKind::invalid_argument, "deflate failed with code " + std::to_string(rc)};
        return size;
    }
};
#endif
}  // namespace

GasSchedule pectra_schedule()
{
    return {10, 40, "pectra"};
}

GasSchedule pre_pectra_schedule()
{
    return {4, 16, "pre-pectra"};
}

GasSchedule schedule_by_name(std::string_view name)
{
    if (name == "pectra")
        return pectra_schedule();
    if (name == "pre-pectra" || name == "prepectra")
        return pre_pectra_schedule();
    throw Error{ErrorKind::not_found, "unknown gas schedule '" + std::string{name} + "'"};
}

double calldata_gas(std::span<const std::uint8_t> bytes, const GasSchedule& schedule) noexcept
{
    const auto zeros = static_cast<double>(std::count(bytes.begin(), bytes.end(), std::uint8_t{0}));
    const auto nonzeros = static_cast<double>(bytes.size()) - zeros;
    return zeros * schedule.zero_byte_gas + nonzeros * schedule.nonzero_byte_gas;
}

Payload gen_payload(std::size_t size, double zero_ratio, std::uint64_t seed)
{
    if (!(zero_ratio >= 0 && zero_ratio <= 1))
        throw Error{ErrorKind::invalid_argument, "zero_ratio must be in [0, 1]"};
    // mt19937_64 output is fixed by the standard; the mappings below avoid the
    // implementation-defined distributions so payloads match across toolchains.
    std::mt19937_64 rng{seed};
    Payload p;
    p.seed = seed;
    p.zero_ratio = zero_ratio;
    p.bytes.resize(size);
    for (auto& b : p.bytes)
    {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < zero_ratio)
        {
            b = 0;
            continue;
        }
        std::uint64_t v;
        do
            v = rng() >> 56;
        while (v == 0);
        b = static_cast<std::uint8_t>(v);
    }
    return p;
}

double gas_to_fill_blob(const GasSchedule& schedule, double zero_ratio)
{
    if (!(zero_ratio >= 0 && zero_ratio <= 1))
        throw Error{ErrorKind::invalid_argument, "zero_ratio must be in [0, 1]"};
    return static_cast<double>(blob_size) *
           (zero_ratio * schedule.zero_byte_gas + (1 - zero_ratio) * schedule.nonzero_byte_gas);
}

void write_payload(const Payload& payload, const std::filesystem::path& path)
{
    std::ofstream out{path, std::ios::binary};
    out.write(reinterpret_cast<const char*>(payload.bytes.data()), static_cast<std::streamsize>(payload.bytes.size()));
    if (!out)
        throw Error{ErrorKind::io, "cannot write payload to '" + path.string() + "'"};
}

std::size_t EntropyEstimator::compressed_size(std::span<const std::uint8_t> bytes, int) const
{
    std::array<std::size_t, 256> freq{};
    for (const auto b : bytes)
        ++freq[b];
    const auto n = static_cast<double>(bytes.size());
    double bits = 0;
    for (const auto f : freq)
    {
        if (f != 0)
            bits -= static_cast<double>(f) * std::log2(static_cast<double>(f) / n);
    }
    return header_bytes + static_cast<std::size_t>(std::ceil(bits / 8));
}

std::unique_ptr<Compressor> make_compressor(std::string_view name)
{
    if (name == "entropy")
        return std::make_unique<EntropyEstimator>();
#ifdef ROLLUP_LAB_HAVE_ZLIB
    if (name == "deflate")
        return std::make_unique<DeflateCompressor>();
#endif
    throw Error{ErrorKind::not_found, "unknown compressor '" + std::string{name} + "'"};
}

std::vector<std::string> compressor_names()
{
#ifdef ROLLUP_LAB_HAVE_ZLIB
    return {"entropy", "deflate"};
#else
    return {"entropy"};
#endif
}

double compression_ratio(const Payload& payload, const Compressor& compressor, int quality)
{
    if (payload.bytes.empty())
        throw Error{ErrorKind::invalid_argument, "compression ratio of an empty payload is undefined"};
    const auto size = compressor.compressed_size(payload.bytes, quality);
    if (size == 0)
        throw Error{ErrorKind::invalid_argument, compressor.name() + " reported a zero-byte output"};
    return static_cast<double>(size) / static_cast<double>(payload.bytes.size());
}

CalldataPoint calldata_sweep_point(const GasSchedule& schedule, const Compressor& compressor, double zero_ratio,
    int quality, std::size_t size, std::uint64_t first_seed, std::uint32_t seeds)
{
    if (seeds == 0 || size == 0)
        throw Error{ErrorKind::invalid_argument, "sweep needs at least one seed and a non-empty payload"};
    CalldataPoint pt;
    pt.zero_ratio = zero_ratio;
    pt.quality = quality;
    pt.expected_gas = static_cast<double>(size) / static_cast<double>(blob_size) *
                      gas_to_fill_blob(schedule, zero_ratio);
    for (std::uint32_t i = 0; i < seeds; ++i)
    {
        const auto p = gen_payload(size, zero_ratio, first_seed + i);
        pt.mean_gas += calldata_gas(p.bytes, schedule);
        pt.mean_ratio += compression_ratio(p, compressor, quality);
    }
    pt.mean_gas /= seeds;
    pt.mean_ratio /= seeds;
    return pt;
}
}  // namespace rollup_lab
