// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <rollup_lab/rollup_lab.h>
#include <json.hpp>
#include <chrono>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rollup_lab::cli
{
/// Exit-code contract of the tool.
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 2,
    exit_io = 3,
    exit_internal = 4,
};

struct CliError : std::runtime_error
{
    int code;
    CliError(int c, const std::string& message) : std::runtime_error{message}, code{c} {}
};

/// Throws CliError carrying the library's last error unless status is RL_OK.
void check(rl_status status);

[[noreturn]] void usage_error(const std::string& message);

struct ConfigDeleter
{
    void operator()(rl_config* c) const noexcept { rl_config_destroy(c); }
};
struct ScenarioDeleter
{
    void operator()(rl_scenario* s) const noexcept { rl_scenario_destroy(s); }
};
struct TrajectoryDeleter
{
    void operator()(rl_trajectory* t) const noexcept { rl_trajectory_destroy(t); }
};
using Config = std::unique_ptr<rl_config, ConfigDeleter>;
using Scenario = std::unique_ptr<rl_scenario, ScenarioDeleter>;
using Trajectory = std::unique_ptr<rl_trajectory, TrajectoryDeleter>;

/// Shortest round-trip decimal form.
std::string num(double v);
/// Fixed decimals.
std::string fixed(double v, int decimals);

inline constexpr double wei_per_eth = 1e18;
inline constexpr double wei_per_gwei = 1e9;

/// Output directory plus the run manifest. Nothing touches the file system
/// until the first output is written.
class Run
{
public:
    Run(std::string command, std::filesystem::path dir);

    nlohmann::ordered_json& parameters() { return parameters_; }

    /// Path for an output file; records it in the manifest.
    std::string output(const std::string& filename);

    /// Writes text to an output file.
    void write(const std::string& filename, const std::string& content);

    /// Writes manifest_<command>.json.
    void finish();

private:
    void ensure_dir();

    std::string command_;
    std::filesystem::path dir_;
    nlohmann::ordered_json parameters_ = nlohmann::ordered_json::object();
    std::vector<std::string> outputs_;
    std::chrono::steady_clock::time_point start_;
    bool dir_ready_ = false;
};

/// File-name-safe form of a label.
std::string slug(const std::string& s);
}  // namespace rollup_lab::cli
