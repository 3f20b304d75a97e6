// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"
#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>

namespace rollup_lab::cli
{
void check(rl_status status)
{
    switch (status)
    {
    case RL_OK:
        return;
    case RL_ERROR_IO:
        throw CliError{exit_io, rl_last_error()};
    case RL_ERROR_INTERNAL:
        throw CliError{exit_internal, rl_last_error()};
    default:
        throw CliError{exit_usage, rl_last_error()};
    }
}

void usage_error(const std::string& message)
{
    throw CliError{exit_usage, message};
}

std::string num(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0)
        return "0";
    std::array<char, 64> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), r.ptr};
}

std::string fixed(double v, int decimals)
{
    if (!std::isfinite(v))
        return num(v);
    std::array<char, 512> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
    std::string s{buf.data(), r.ptr};
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

Run::Run(std::string command, std::filesystem::path dir)
  : command_{std::move(command)}, dir_{std::move(dir)}, start_{std::chrono::steady_clock::now()}
{}

void Run::ensure_dir()
{
    if (dir_ready_)
        return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw CliError{exit_io, "cannot create output directory '" + dir_.string() + "': " + ec.message()};
    dir_ready_ = true;
}

std::string Run::output(const std::string& filename)
{
    ensure_dir();
    const auto path = (dir_ / filename).string();
    outputs_.push_back(path);
    return path;
}

void Run::write(const std::string& filename, const std::string& content)
{
    const auto path = output(filename);
    std::ofstream out{path, std::ios::binary};
    out << content;
    out.close();
    if (!out)
        throw CliError{exit_io, "cannot write '" + path + "'"};
}

void Run::finish()
{
    ensure_dir();
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    nlohmann::ordered_json m;
    m["command"] = command_;
    m["version"] = rl_version();
    m["registry_stamp"] = rl_registry_stamp();
    m["parameters"] = parameters_;
    m["outputs"] = outputs_;
    m["wall_clock_s"] = elapsed;
    const auto path = (dir_ / ("manifest_" + command_ + ".json")).string();
    std::ofstream out{path};
    out << m.dump(2) << '\n';
    out.close();
    if (!out)
        throw CliError{exit_io, "cannot write '" + path + "'"};
}

std::string slug(const std::string& s)
{
    std::string out;
    for (const char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
    return out;
}
}  // namespace rollup_lab::cli
