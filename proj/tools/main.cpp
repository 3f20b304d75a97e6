// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"
#include "svg.hpp"
#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace rollup_lab::cli;

namespace
{
std::filesystem::path out_dir;

std::filesystem::path default_out_dir()
{
    if (const char* env = std::getenv("ROLLUP_LAB_OUT"); env && *env)
        return env;
    return ".";
}

/// Scenario flags shared by dos and mitigate.
struct ScenarioFlags
{
    std::string file;
    double budget_eth = 0;
    std::uint64_t duration = 0;
    std::uint32_t delay = 0;
    double priority_fee_gwei = 0;
    std::vector<std::string> sets;
    CLI::Option* budget = nullptr;
    CLI::Option* duration_opt = nullptr;
    CLI::Option* delay_opt = nullptr;
    CLI::Option* priority = nullptr;

    void add(CLI::App& app)
    {
        app.add_option("--scenario", file, "Scenario file (key = value)")->check(CLI::ExistingFile);
        budget = app.add_option("--budget", budget_eth, "Attack budget in ETH");
        duration_opt = app.add_option("--duration", duration, "Attack length in L1 blocks");
        delay_opt = app.add_option("--delay", delay, "Blob price update delay in L1 blocks");
        priority = app.add_option("--priority-fee", priority_fee_gwei, "L1 priority fee in Gwei");
        app.add_option("--set", sets, "Config override field=value (repeatable)");
    }

    Scenario build(nlohmann::ordered_json& params) const
    {
        rl_scenario* raw = nullptr;
        if (!file.empty())
        {
            check(rl_scenario_load(file.c_str(), &raw));
            params["scenario"] = file;
        }
        else
            check(rl_scenario_create(&raw));
        Scenario s{raw};
        const auto set = [&](const char* key, const std::string& value) {
            check(rl_scenario_set(s.get(), key, value.c_str()));
            params[key] = value;
        };
        if (budget->count())
            set("budget_eth", num(budget_eth));
        if (duration_opt->count())
            set("duration_blocks", std::to_string(duration));
        if (delay_opt->count())
            set("delay_blocks", std::to_string(delay));
        if (priority->count())
            set("priority_fee_gwei", num(priority_fee_gwei));
        for (const auto& kv : sets)
        {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                usage_error("--set expects field=value, got '" + kv + "'");
            const auto key = "override." + kv.substr(0, eq);
            check(rl_scenario_set(s.get(), key.c_str(), kv.substr(eq + 1).c_str()));
            params["overrides"][kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return s;
    }
};

struct Resolved
{
    std::string label;
    Config config;
};

/// One config per requested rollup, all validated before any output.
std::vector<Resolved> resolve_rollups(rl_scenario* scenario, const std::vector<std::string>& names, bool throttle,
    std::optional<double> floor_gwei)
{
    std::vector<std::string> wanted = names;
    if (wanted.empty())
    {
        const std::string named = rl_scenario_rollup(scenario);
        if (named.empty())
            usage_error("--rollup is required (or a scenario naming one)");
        wanted.push_back(named);
    }
    std::vector<Resolved> out;
    for (auto name : wanted)
    {
        if (throttle && !name.ends_with("-throttle"))
            name += "-throttle";
        if (!names.empty())
            check(rl_scenario_set(scenario, "rollup", name.c_str()));
        rl_config* raw = nullptr;
        check(rl_scenario_resolve(scenario, name.c_str(), &raw));
        Config c{raw};
        if (floor_gwei)
        {
            const auto wei = num(*floor_gwei * wei_per_gwei);
            check(rl_config_set(c.get(), "blob_floor_wei", wei.c_str()));
            check(rl_config_set(c.get(), "rho_blob_0_wei", wei.c_str()));
        }
        out.push_back({rl_config_name(c.get()), std::move(c)});
    }
    return out;
}

void print_caveat(const std::string& label, const char* caveat)
{
    if (caveat && *caveat)
        std::cerr << "note (" << label << "): " << caveat << '\n';
}

std::vector<rl_interval> intervals(const rl_trajectory* t)
{
    std::vector<rl_interval> rows(rl_trajectory_size(t));
    for (std::size_t i = 0; i < rows.size(); ++i)
        check(rl_trajectory_at(t, i, &rows[i]));
    return rows;
}

// ---- dos ----

struct DosFlags
{
    std::vector<std::string> rollups;
    ScenarioFlags scenario;
    double floor_gwei = 0;
    CLI::Option* floor = nullptr;
    bool throttle = false;
    bool svg = false;
};

void run_dos(const DosFlags& f)
{
    Run run{"dos", out_dir};
    auto& params = run.parameters();
    auto scenario = f.scenario.build(params);
    std::optional<double> floor;
    if (f.floor->count())
    {
        floor = f.floor_gwei;
        params["floor_gwei"] = num(f.floor_gwei);
    }
    params["throttle"] = f.throttle;
    auto configs = resolve_rollups(scenario.get(), f.rollups, f.throttle, floor);

    std::vector<Trajectory> results;
    for (const auto& r : configs)
    {
        rl_trajectory* raw = nullptr;
        check(rl_dos_simulate(r.config.get(), scenario.get(), &raw));
        results.emplace_back(raw);
    }

    Plot plot{"DoS cost per rollup", "L1 block", "cumulative cost (ETH)", false, false, {}};
    for (std::size_t i = 0; i < configs.size(); ++i)
    {
        const auto& label = configs[i].label;
        const auto* t = results[i].get();
        params["rollups"].push_back(label);
        check(rl_trajectory_write_csv(t, run.output("dos_" + slug(label) + ".csv").c_str()));
        rl_trajectory_summary s{};
        check(rl_trajectory_summary_get(t, &s));
        std::cout << label << ": " << s.blocks_sustained << " L1 blocks, " << fixed(s.total_spent_wei / wei_per_eth, 6)
                  << " ETH" << (s.priced_out ? ", priced out" : "")
                  << (s.flat_cost ? ", flat cost" : (s.escalating ? ", escalating" : "")) << '\n';
        print_caveat(label, rl_trajectory_caveat(t));
        Series series{label, {}};
        for (const auto& row : intervals(t))
            series.points.emplace_back(static_cast<double>(row.block), row.cumulative / wei_per_eth);
        plot.series.push_back(std::move(series));
    }
    if (f.svg)
        run.write("dos.svg", render_svg(plot));
    run.finish();
}

// ---- finality ----

struct FinalityFlags
{
    std::string mode;
    std::vector<double> budgets;
    bool sweep = false;
    std::vector<std::string> rollups;
    std::uint32_t delay = 0;
    double priority_fee_gwei = 0.2;
    std::vector<std::string> sets;
    bool trajectory = false;
    bool svg = false;
};

const std::vector<double> sweep_budgets{0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100};

Config l1_config(const std::string& rollup, const std::vector<std::string>& sets, nlohmann::ordered_json& params)
{
    rl_config* raw = nullptr;
    check(rl_config_create(rollup.c_str(), &raw));
    Config c{raw};
    for (const auto& kv : sets)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            usage_error("--set expects field=value, got '" + kv + "'");
        check(rl_config_set(c.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()));
        params["overrides"][kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return c;
}

void run_finality(const FinalityFlags& f)
{
    Run run{"finality", out_dir};
    auto& params = run.parameters();
    params["mode"] = f.mode;
    params["delay_blocks"] = f.delay;
    params["priority_fee_gwei"] = num(f.priority_fee_gwei);

    std::vector<double> budgets = f.budgets;
    if (f.sweep)
        budgets.insert(budgets.end(), sweep_budgets.begin(), sweep_budgets.end());
    std::sort(budgets.begin(), budgets.end());
    budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
    if (budgets.empty())
        usage_error("give --budget or --sweep");
    for (const double b : budgets)
    {
        if (!(b > 0))
            usage_error("--budget must be positive");
        params["budgets_eth"].push_back(b);
    }
    const std::string header = "budget_eth,k_l1,total_blocks,amplification\n";
    const double fee = f.priority_fee_gwei * wei_per_gwei;
    Plot plot{"Finality delay", "budget (ETH)", "finality delay (L1 blocks)", true, false, {}};

    if (f.mode == "l1")
    {
        if (!f.rollups.empty() || f.delay != 0)
            usage_error("--rollup and --delay apply to --mode l2");
        auto c = l1_config("scroll", f.sets, params);
        std::ostringstream csv;
        csv << header;
        Series series{"direct L1", {}};
        for (const double b : budgets)
        {
            rl_direct_delay_result r{};
            check(rl_direct_l1_delay(c.get(), b * wei_per_eth, &r));
            csv << num(b) << ',' << fixed(r.k_l1, 6) << ',' << r.total_blocks << ",1\n";
            std::cout << "budget " << num(b) << " ETH: k_L1 " << fixed(r.k_l1, 2) << ", total " << r.total_blocks
                      << " L1 blocks\n";
            series.points.emplace_back(b, static_cast<double>(r.total_blocks));
        }
        plot.series.push_back(std::move(series));
        run.write("finality_l1.csv", csv.str());
    }
    else
    {
        if (f.rollups.empty())
            usage_error("--mode l2 requires --rollup");
        std::vector<std::pair<std::string, Config>> configs;
        for (const auto& name : f.rollups)
        {
            auto c = l1_config(name, f.sets, params);
            configs.emplace_back(rl_config_name(c.get()), std::move(c));
            params["rollups"].push_back(configs.back().first);
        }
        std::vector<std::pair<std::string, std::string>> files;
        std::vector<Trajectory> trajectories;
        for (const auto& [label, c] : configs)
        {
            std::ostringstream csv;
            csv << header;
            Series series{label, {}};
            for (const double b : budgets)
            {
                rl_amplified_delay_result r{};
                const auto status = rl_amplified_delay(c.get(), b * wei_per_eth, fee, f.delay, &r);
                if (status == RL_ERROR_VALIDATION && budgets.size() > 1)
                {
                    csv << num(b) << ",,,unaffordable\n";
                    continue;
                }
                check(status);
                if (!r.susceptible)
                {
                    csv << num(b) << ",,,not susceptible\n";
                    std::cout << label << " @ " << num(b) << " ETH: not susceptible (T_batches "
                              << fixed(r.t_batches, 3) << ")\n";
                    continue;
                }
                csv << num(b) << ',' << fixed(r.k_l1, 6) << ',' << fixed(r.total_blocks, 6) << ','
                    << fixed(r.amplification, 6) << '\n';
                std::cout << label << " @ " << num(b) << " ETH: k_L1 " << fixed(r.k_l1, 2) << ", total "
                          << fixed(r.total_blocks, 1) << " L1 blocks, amplification " << fixed(r.amplification, 2)
                          << "x\n";
                series.points.emplace_back(b, r.total_blocks);
            }
            if (!series.points.empty())
                plot.series.push_back(std::move(series));
            const std::string suffix = f.delay ? "_d" + std::to_string(f.delay) : "";
            files.emplace_back("finality_l2_" + slug(label) + suffix + ".csv", csv.str());
            if (f.trajectory)
            {
                rl_trajectory* raw = nullptr;
                check(rl_finality_trajectory(c.get(), budgets.front() * wei_per_eth, fee, &raw));
                trajectories.emplace_back(raw);
            }
        }
        for (const auto& [name, content] : files)
            run.write(name, content);
        for (std::size_t i = 0; i < trajectories.size(); ++i)
        {
            const auto path = run.output("finality_trajectory_" + slug(configs[i].first) + ".csv");
            check(rl_trajectory_write_csv(trajectories[i].get(), path.c_str()));
        }
    }
    if (f.svg)
        run.write("finality_" + f.mode + ".svg", render_svg(plot));
    run.finish();
}

// ---- prover ----

struct ProverFlags
{
    std::vector<std::string> attacks;
    std::vector<std::string> profiles;
    bool all = false;
    double usd_per_hour = 0;
    double l2_fee_gwei = 0;
    double eth_usd = 0;
    double cycles_per_second = 0;
    CLI::Option* usd = nullptr;
    CLI::Option* fee = nullptr;
    CLI::Option* eth = nullptr;
    CLI::Option* cps = nullptr;
};

void run_prover(const ProverFlags& f)
{
    Run run{"prover", out_dir};
    auto& params = run.parameters();
    rl_prover_rates rates{};
    rl_prover_rates_default(&rates);
    if (f.usd->count())
        rates.usd_per_hour = f.usd_per_hour;
    if (f.fee->count())
        rates.l2_base_fee_wei = f.l2_fee_gwei * wei_per_gwei;
    if (f.eth->count())
        rates.eth_usd = f.eth_usd;
    if (f.cps->count())
        rates.cycles_per_second = f.cycles_per_second;
    params["usd_per_hour"] = rates.usd_per_hour;
    params["l2_base_fee_gwei"] = rates.l2_base_fee_wei / wei_per_gwei;
    params["eth_usd"] = rates.eth_usd;
    params["cycles_per_second"] = rates.cycles_per_second;

    std::vector<std::string> attacks = f.attacks;
    if (f.all)
        for (std::size_t i = 0; i < rl_prover_attack_count(); ++i)
            attacks.emplace_back(rl_prover_attack_name(i));
    if (attacks.empty() && f.profiles.empty())
        usage_error("give --attack, --profile or --all");

    std::vector<rl_prover_report> rows;
    for (const auto& a : attacks)
    {
        rl_prover_report r{};
        check(rl_prover_attack_report(a.c_str(), &rates, &r));
        rows.push_back(r);
        params["attacks"].push_back(a);
    }
    for (const auto& p : f.profiles)
    {
        rl_prover_report r{};
        check(rl_prover_profile_report(p.c_str(), &rates, &r));
        if (r.over_gas_cap)
            std::cerr << "warning: profile '" << p << "' exceeds the 36M block gas cap\n";
        rows.push_back(r);
        params["profiles"].push_back(p);
    }
    for (const auto& r : rows)
    {
        std::cout << r.name << ": time " << fixed(r.proving_time_s, 1) << " s, cost $" << fixed(r.proving_cost_usd, 2)
                  << ", fees $" << fixed(r.fees_usd, 2) << ", profit/loss $" << fixed(r.profit_loss_usd, 2)
                  << ", delay " << fixed(r.latency_delay_s, 1) << " s (" << fixed(r.latency_delay_pct, 1) << "%)"
                  << (r.estimated ? " [extrapolated]" : "") << '\n';
    }
    check(rl_prover_write_csv(rows.data(), rows.size(), run.output("prover.csv").c_str()));
    run.finish();
}

// ---- econ ----

struct EconFlags
{
    std::string preset = "scroll-appendix-c";
    double eth_usd = 0;
    double l1_gas_price_gwei = 0;
    double blob_fee_per_tx_eth = 0;
    CLI::Option* eth = nullptr;
    CLI::Option* gas = nullptr;
    CLI::Option* blob = nullptr;
};

void run_econ(const EconFlags& f)
{
    Run run{"econ", out_dir};
    auto& params = run.parameters();
    rl_econ_params p{};
    check(rl_econ_preset(f.preset.c_str(), &p));
    params["preset"] = f.preset;
    if (f.eth->count())
        p.eth_usd = f.eth_usd;
    if (f.gas->count())
        p.l1_gas_price_wei = f.l1_gas_price_gwei * wei_per_gwei;
    if (f.blob->count())
        p.blob_fee_per_tx_wei = f.blob_fee_per_tx_eth * wei_per_eth;
    params["eth_usd"] = p.eth_usd;
    params["l1_gas_price_gwei"] = p.l1_gas_price_wei / wei_per_gwei;
    params["blob_fee_per_tx_eth"] = p.blob_fee_per_tx_wei / wei_per_eth;
    rl_econ_report r{};
    check(rl_economic_damage(&p, &r));
    check(rl_econ_write(&p, "csv", run.output("econ.csv").c_str()));
    check(rl_econ_write(&p, "text", run.output("econ.txt").c_str()));
    std::cout << "attacker hourly " << fixed(r.attacker_hourly_wei / wei_per_eth, 4) << " ETH ($"
              << fixed(r.attacker_hourly_usd, 2) << ")\n"
              << "loss per batch $" << fixed(r.loss_per_batch_usd, 2) << ", hourly loss $"
              << fixed(r.loss_hourly_usd, 2) << '\n';
    run.finish();
}

// ---- mitigate ----

struct MitigateFlags
{
    std::vector<std::string> rollups;
    ScenarioFlags scenario;
    double target = 0.5;
    double coefficient = 0.125;
    bool svg = false;
};

void run_mitigate(const MitigateFlags& f)
{
    Run run{"mitigate", out_dir};
    auto& params = run.parameters();
    auto scenario = f.scenario.build(params);
    params["utilization_target"] = f.target;
    params["adjustment_coefficient"] = f.coefficient;
    auto configs = resolve_rollups(scenario.get(), f.rollups, false, std::nullopt);

    std::vector<std::pair<Trajectory, Trajectory>> results;
    for (const auto& r : configs)
    {
        rl_trajectory* plain = nullptr;
        check(rl_dos_simulate(r.config.get(), scenario.get(), &plain));
        Trajectory p{plain};
        rl_trajectory* mitigated = nullptr;
        check(rl_dos_simulate_mitigated(r.config.get(), scenario.get(), f.target, f.coefficient, &mitigated));
        results.emplace_back(std::move(p), Trajectory{mitigated});
    }

    Plot plot{"Attacker cost with and without an L2 blob fee", "L1 block", "cumulative cost (ETH)", false, true, {}};
    for (std::size_t i = 0; i < configs.size(); ++i)
    {
        const auto& label = configs[i].label;
        params["rollups"].push_back(label);
        const auto off = intervals(results[i].first.get());
        const auto on = intervals(results[i].second.get());
        const auto n = std::min(off.size(), on.size());
        std::ostringstream csv;
        csv << "block,l1_price_wei,l2_blob_price_wei,unmitigated_cumulative,mitigated_cumulative,ratio\n";
        Series s_off{label + " off", {}};
        Series s_on{label + " on", {}};
        for (std::size_t k = 0; k < n; ++k)
        {
            const double ratio = off[k].cumulative > 0 ? on[k].cumulative / off[k].cumulative : 0;
            csv << off[k].block << ',' << num(on[k].price_wei) << ',' << num(on[k].l2_blob_price_wei) << ','
                << num(off[k].cumulative) << ',' << num(on[k].cumulative) << ',' << num(ratio) << '\n';
            s_off.points.emplace_back(static_cast<double>(off[k].block), off[k].cumulative / wei_per_eth);
            s_on.points.emplace_back(static_cast<double>(on[k].block), on[k].cumulative / wei_per_eth);
        }
        if (n > 0)
        {
            std::cout << label << ": after " << n << " L1 blocks, unmitigated "
                      << num(off[n - 1].cumulative / wei_per_eth) << " ETH, mitigated "
                      << num(on[n - 1].cumulative / wei_per_eth) << " ETH\n";
        }
        run.write("mitigate_" + slug(label) + ".csv", csv.str());
        plot.series.push_back(std::move(s_off));
        plot.series.push_back(std::move(s_on));
    }
    if (f.svg)
        run.write("mitigate.svg", render_svg(plot));
    run.finish();
}

// ---- calldata ----

struct CalldataFlags
{
    std::vector<double> zero_ratios;
    std::vector<int> qualities{1, 6, 9};
    std::string schedule = "pectra";
    std::string compressor = "entropy";
    std::uint32_t seeds = 100;
    std::uint64_t first_seed = 0;
    std::size_t size = 131'072;
    std::string payload_file;
    std::uint64_t payload_seed = 0;
    bool svg = false;
};

void run_calldata(const CalldataFlags& f)
{
    Run run{"calldata", out_dir};
    auto& params = run.parameters();
    std::vector<double> ratios = f.zero_ratios;
    if (ratios.empty())
        for (int i = 0; i <= 20; ++i)
            ratios.push_back(i / 20.0);
    if (!rl_compressor_available(f.compressor.c_str()))
        usage_error("compressor '" + f.compressor + "' is not available");
    params["schedule"] = f.schedule;
    params["compressor"] = f.compressor;
    params["zero_ratios"] = ratios;
    params["qualities"] = f.qualities;
    params["seeds"] = f.seeds;
    params["first_seed"] = f.first_seed;
    params["payload_size"] = f.size;

    std::vector<rl_calldata_point> points;
    for (const double z : ratios)
    {
        for (const int q : f.qualities)
        {
            rl_calldata_point p{};
            check(rl_calldata_sweep_point(
                f.schedule.c_str(), f.compressor.c_str(), z, q, f.size, f.first_seed, f.seeds, &p));
            points.push_back(p);
        }
    }

    std::ostringstream csv;
    csv << "zero_ratio,quality,mean_gas,expected_gas,mean_ratio\n";
    for (const auto& p : points)
        csv << num(p.zero_ratio) << ',' << p.quality << ',' << fixed(p.mean_gas, 2) << ','
            << fixed(p.expected_gas, 2) << ',' << fixed(p.mean_ratio, 6) << '\n';
    for (const double z : ratios)
    {
        double g = 0;
        rl_gas_to_fill_blob(f.schedule.c_str(), z, &g);
        std::cout << "zero ratio " << num(z) << ": " << fixed(g, 1) << " gas per blob (" << f.schedule << ")\n";
    }
    run.write("calldata.csv", csv.str());

    if (!f.payload_file.empty())
    {
        params["payload_file"] = f.payload_file;
        params["payload_seed"] = f.payload_seed;
        const auto path = run.output(slug(f.payload_file));
        check(rl_payload_write(f.size, ratios.front(), f.payload_seed, path.c_str()));
    }
    if (f.svg)
    {
        Plot gas{"Calldata gas vs zero ratio", "zero ratio", "gas per payload", false, false, {}};
        Series g{f.schedule, {}};
        Plot ratio{"Compression ratio vs zero ratio", "zero ratio", "compressed / raw", false, false, {}};
        for (const int q : f.qualities)
        {
            Series s{f.compressor + " q" + std::to_string(q), {}};
            for (const auto& p : points)
            {
                if (p.quality != q)
                    continue;
                s.points.emplace_back(p.zero_ratio, p.mean_ratio);
                if (q == f.qualities.front())
                    g.points.emplace_back(p.zero_ratio, p.mean_gas);
            }
            ratio.series.push_back(std::move(s));
        }
        gas.series.push_back(std::move(g));
        run.write("calldata_gas.svg", render_svg(gas));
        run.write("calldata_ratio.svg", render_svg(ratio));
    }
    run.finish();
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rollup-lab: rollup fee-mechanism attack simulator", "rollup-lab"};
    app.set_version_flag("--version", rl_version());
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("--out", out, "Output directory (default $ROLLUP_LAB_OUT or .)");

    DosFlags dos;
    auto* dos_cmd = app.add_subcommand("dos", "DA-saturation DoS cost trajectories");
    dos_cmd->add_option("--rollup", dos.rollups, "Rollup name (repeatable)");
    dos.scenario.add(*dos_cmd);
    dos.floor = dos_cmd->add_option("--floor-gwei", dos.floor_gwei, "Blob price floor and start price in Gwei");
    dos_cmd->add_flag("--throttle", dos.throttle, "Use the rollup's throttle-mode variant");
    dos_cmd->add_flag("--svg", dos.svg, "Also write dos.svg");

    FinalityFlags fin;
    auto* fin_cmd = app.add_subcommand("finality", "Finality delay by blob stuffing");
    fin_cmd->add_option("--mode", fin.mode, "l1 (direct) or l2 (amplified)")
        ->required()
        ->check(CLI::IsMember({"l1", "l2"}));
    fin_cmd->add_option("--budget", fin.budgets, "Budget in ETH (repeatable)");
    fin_cmd->add_flag("--sweep", fin.sweep, "Sweep budgets from 0.1 to 100 ETH");
    fin_cmd->add_option("--rollup", fin.rollups, "Rollup name (repeatable, l2 only)");
    fin_cmd->add_option("--delay", fin.delay, "Blob price update delay in L1 blocks");
    fin_cmd->add_option("--priority-fee", fin.priority_fee_gwei, "L1 priority fee in Gwei");
    fin_cmd->add_option("--set", fin.sets, "Config override field=value (repeatable)");
    fin_cmd->add_flag("--trajectory", fin.trajectory, "Write the block-by-block attack and drain (l2)");
    fin_cmd->add_flag("--svg", fin.svg, "Also write an SVG plot");

    ProverFlags prover;
    auto* prover_cmd = app.add_subcommand("prover", "Prover-killer block economics");
    prover_cmd->add_option("--attack", prover.attacks, "Built-in attack block (repeatable)");
    prover_cmd->add_option("--profile", prover.profiles, "Opcode profile CSV (repeatable)");
    prover_cmd->add_flag("--all", prover.all, "All built-in attack blocks");
    prover.usd = prover_cmd->add_option("--usd-per-hour", prover.usd_per_hour, "Prover cost in USD per hour");
    prover.fee = prover_cmd->add_option("--l2-fee-gwei", prover.l2_fee_gwei, "Effective L2 base fee in Gwei");
    prover.eth = prover_cmd->add_option("--eth-usd", prover.eth_usd, "ETH price in USD");
    prover.cps = prover_cmd->add_option(
        "--cycles-per-second", prover.cycles_per_second, "Prover speed for unmeasured blocks");

    EconFlags econ;
    auto* econ_cmd = app.add_subcommand("econ", "Economic damage ledger");
    econ_cmd->add_option("--preset", econ.preset, "Ledger preset");
    econ.eth = econ_cmd->add_option("--eth-usd", econ.eth_usd, "ETH price in USD");
    econ.gas = econ_cmd->add_option("--l1-gas-price-gwei", econ.l1_gas_price_gwei, "L1 gas price for commits");
    econ.blob = econ_cmd->add_option("--blob-fee-per-tx-eth", econ.blob_fee_per_tx_eth, "Blob fee per attack tx");

    MitigateFlags mit;
    auto* mit_cmd = app.add_subcommand("mitigate", "DoS cost with and without an L2 blob base fee");
    mit_cmd->add_option("--rollup", mit.rollups, "Rollup name (repeatable)");
    mit.scenario.add(*mit_cmd);
    mit_cmd->add_option("--target", mit.target, "Utilization target of the L2 blob fee");
    mit_cmd->add_option("--coef", mit.coefficient, "Adjustment coefficient of the L2 blob fee");
    mit_cmd->add_flag("--svg", mit.svg, "Also write mitigate.svg");

    CalldataFlags cd;
    auto* cd_cmd = app.add_subcommand("calldata", "Calldata gas and compressibility sweep");
    cd_cmd->add_option("--zero-ratio", cd.zero_ratios, "Zero-byte ratio (repeatable; default 0 to 1 by 0.05)");
    cd_cmd->add_option("--quality", cd.qualities, "Compressor quality level (repeatable)");
    cd_cmd->add_option("--schedule", cd.schedule, "pectra or pre-pectra");
    cd_cmd->add_option("--compressor", cd.compressor, "entropy or deflate");
    cd_cmd->add_option("--seeds", cd.seeds, "Payloads per point");
    cd_cmd->add_option("--first-seed", cd.first_seed, "First payload seed");
    cd_cmd->add_option("--size", cd.size, "Payload size in bytes");
    cd_cmd->add_option("--write-payload", cd.payload_file, "Write one payload at the first zero ratio");
    cd_cmd->add_option("--seed", cd.payload_seed, "Seed of the written payload");
    cd_cmd->add_flag("--svg", cd.svg, "Also write SVG plots");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    out_dir = out.empty() ? default_out_dir() : std::filesystem::path{out};
    try
    {
        if (dos_cmd->parsed())
            run_dos(dos);
        else if (fin_cmd->parsed())
            run_finality(fin);
        else if (prover_cmd->parsed())
            run_prover(prover);
        else if (econ_cmd->parsed())
            run_econ(econ);
        else if (mit_cmd->parsed())
            run_mitigate(mit);
        else if (cd_cmd->parsed())
            run_calldata(cd);
    }
    catch (const CliError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}
