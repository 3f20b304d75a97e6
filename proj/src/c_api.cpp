// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/calldata.hpp>
#include <rollup_lab/config.hpp>
#include <rollup_lab/da_attacks.hpp>
#include <rollup_lab/error.hpp>
#include <rollup_lab/prover_econ.hpp>
#include <rollup_lab/rollup_lab.h>
#include <rollup_lab/tfm.hpp>
#include <cmath>
#include <cstring>
#include <fstream>
#include <new>

struct rl_config
{
    rollup_lab::RollupConfig rollup;
    rollup_lab::L1Params l1;
};

struct rl_scenario
{
    rollup_lab::ScenarioFile file;
};

struct rl_trajectory
{
    rollup_lab::AttackTrajectory t;
};

namespace
{
using namespace rollup_lab;

thread_local std::string last_error;

rl_status to_status(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::invalid_argument:
        return RL_ERROR_INVALID_ARGUMENT;
    case ErrorKind::parse:
        return RL_ERROR_PARSE;
    case ErrorKind::validation:
        return RL_ERROR_VALIDATION;
    case ErrorKind::not_found:
        return RL_ERROR_NOT_FOUND;
    case ErrorKind::io:
        return RL_ERROR_IO;
    }
    return RL_ERROR_INTERNAL;
}

template <typename Fn>
rl_status guarded(Fn&& fn) noexcept
{
    try
    {
        fn();
        last_error.clear();
        return RL_OK;
    }
    catch (const Error& e)
    {
        last_error = e.what();
        return to_status(e.kind());
    }
    catch (const std::bad_alloc&)
    {
        last_error = "out of memory";
    }
    catch (const std::exception& e)
    {
        last_error = e.what();
    }
    catch (...)
    {
        last_error = "unknown error";
    }
    return RL_ERROR_INTERNAL;
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs)
{
    if (((ptrs == nullptr) || ...))
        throw Error{ErrorKind::invalid_argument, "null argument"};
}

std::ofstream open_out(const char* path)
{
    std::ofstream out{path};
    if (!out)
        throw Error{ErrorKind::io, std::string{"cannot open '"} + path + "' for writing"};
    return out;
}

void finish(std::ofstream& out, const char* path)
{
    out.close();
    if (!out)
        throw Error{ErrorKind::io, std::string{"failed writing '"} + path + "'"};
}

EconParams from_c(const rl_econ_params& p)
{
    EconParams e;
    e.tx_per_hour = p.tx_per_hour;
    e.batches_per_hour = p.batches_per_hour;
    e.intrinsic_gas = p.intrinsic_gas;
    e.calldata_gas_per_tx = p.calldata_gas_per_tx;
    e.l2_gas_price = p.l2_gas_price_wei;
    e.blob_fee_per_tx = p.blob_fee_per_tx_wei;
    e.commit_gas = p.commit_gas;
    e.l1_gas_price = p.l1_gas_price_wei;
    e.eth_usd = p.eth_usd;
    return e;
}

ProverRates from_c(const rl_prover_rates& r)
{
    return {r.usd_per_hour, r.l2_base_fee_wei, r.eth_usd, r.cycles_per_second};
}

void to_c(const ProverReport& r, rl_prover_report& out)
{
    std::memset(&out, 0, sizeof(out));
    std::strncpy(out.name, r.name.c_str(), sizeof(out.name) - 1);
    out.total_gas = r.total_gas;
    out.total_cycles = r.total_cycles;
    out.proving_time_s = r.proving_time_s;
    out.proving_cost_usd = r.proving_cost_usd;
    out.fees_usd = r.fees_usd;
    out.profit_loss_usd = r.profit_loss_usd;
    out.latency_delay_s = r.latency_delay_s;
    out.latency_delay_pct = r.latency_delay_pct;
    out.estimated = r.estimated;
    out.over_gas_cap = r.over_gas_cap;
}

double get_field(const rl_config& c, std::string_view f)
{
    const auto& r = c.rollup;
    const auto& l = c.l1;
    if (f == "bt_l2") return r.bt_l2;
    if (f == "max_blobs_per_batch") return r.max_blobs_per_batch;
    if (f == "block_blob_limit") return r.block_blob_limit.value_or(NAN);
    if (f == "tx_to_fill") return r.tx_to_fill;
    if (f == "commit_cost_gwei") return to_gwei(r.commit_cost_c_batch);
    if (f == "l2_base_fee_gwei") return to_gwei(r.l2_base_fee);
    if (f == "scalar_blob") return r.scalar_blob;
    if (f == "bt_l1") return l.bt_l1;
    if (f == "blob_target") return l.blob_target;
    if (f == "blob_limit") return l.blob_limit;
    if (f == "u_blob") return l.u_blob;
    if (f == "rho_blob_0_wei") return l.rho_blob_0;
    if (f == "blob_floor_wei") return l.blob_floor;
    if (f == "gas_per_blob_calldata") return l.gas_per_blob_calldata;
    if (f == "gas_per_blob_fill") return l.gas_per_blob_fill;
    if (f == "blob_gas_per_blob") return l.blob_gas_per_blob;
    if (f == "intrinsic_tx_gas") return l.intrinsic_tx_gas;
    if (f == "decay") return static_cast<double>(l.decay);
    if (f == "decay_fixed_factor") return l.decay_fixed_factor;
    throw Error{ErrorKind::not_found, "unknown field '" + std::string{f} + "'"};
}

rl_status make_trajectory(AttackTrajectory t, rl_trajectory** out)
{
    *out = new rl_trajectory{std::move(t)};
    return RL_OK;
}
}  // namespace

extern "C" {

const char* rl_version(void)
{
    return "0.1.0";
}

const char* rl_last_error(void)
{
    return last_error.c_str();
}

size_t rl_registry_count(void)
{
    return builtin_registry().size();
}

const char* rl_registry_name(size_t index)
{
    const auto& r = builtin_registry();
    return index < r.size() ? r[index].name.c_str() : nullptr;
}

const char* rl_registry_stamp(void)
{
    return "2025-05-10";
}

rl_status rl_config_create(const char* rollup, rl_config** out)
{
    return guarded([&] {
        require(rollup, out);
        *out = nullptr;
        auto* c = new rl_config{find_rollup(rollup), L1Params{}};
        *out = c;
    });
}

rl_status rl_config_clone(const rl_config* config, rl_config** out)
{
    return guarded([&] {
        require(config, out);
        *out = new rl_config{*config};
    });
}

void rl_config_destroy(rl_config* config)
{
    delete config;
}

rl_status rl_config_set(rl_config* config, const char* field, const char* value)
{
    return guarded([&] {
        require(config, field, value);
        auto copy = *config;
        apply_override(copy.rollup, copy.l1, field, value);
        validate(copy.rollup);
        validate(copy.l1);
        *config = std::move(copy);
    });
}

rl_status rl_config_get(const rl_config* config, const char* field, double* out)
{
    return guarded([&] {
        require(config, field, out);
        *out = get_field(*config, field);
    });
}

const char* rl_config_name(const rl_config* config)
{
    return config ? config->rollup.name.c_str() : "";
}

const char* rl_config_caveat(const rl_config* config)
{
    return config ? config->rollup.ordering_note.c_str() : "";
}

size_t rl_config_field_count(void)
{
    return override_fields().size();
}

const char* rl_config_field_name(size_t index)
{
    const auto& f = override_fields();
    return index < f.size() ? f[index].c_str() : nullptr;
}

rl_status rl_scenario_create(rl_scenario** out)
{
    return guarded([&] {
        require(out);
        *out = new rl_scenario{};
    });
}

rl_status rl_scenario_load(const char* path, rl_scenario** out)
{
    return guarded([&] {
        require(path, out);
        *out = nullptr;
        auto file = load_scenario(path);
        *out = new rl_scenario{std::move(file)};
    });
}

void rl_scenario_destroy(rl_scenario* scenario)
{
    delete scenario;
}

rl_status rl_scenario_set(rl_scenario* scenario, const char* key, const char* value)
{
    return guarded([&] {
        require(scenario, key, value);
        set_scenario_key(scenario->file, key, value);
    });
}

rl_status rl_scenario_get(const rl_scenario* scenario, rl_scenario_values* out)
{
    return guarded([&] {
        require(scenario, out);
        const auto& s = scenario->file.scenario;
        out->budget_wei = s.budget;
        out->priority_fee_wei = s.priority_fee;
        out->duration_blocks = s.duration ? static_cast<int64_t>(*s.duration) : -1;
        out->delay_blocks = s.delay;
        out->eth_usd = s.eth_usd;
    });
}

const char* rl_scenario_rollup(const rl_scenario* scenario)
{
    return scenario ? scenario->file.rollup.c_str() : "";
}

rl_status rl_scenario_resolve(const rl_scenario* scenario, const char* fallback_rollup, rl_config** out)
{
    return guarded([&] {
        require(scenario, out);
        *out = nullptr;
        auto c = std::make_unique<rl_config>();
        scenario->file.resolve(c->rollup, c->l1, fallback_rollup ? fallback_rollup : "");
        *out = c.release();
    });
}

rl_status rl_tx_fee(
    const rl_tx_resources* tx, double l2_base_fee_wei, double blob_price_wei, double scalar, rl_price_quote* out)
{
    return guarded([&] {
        require(tx, out);
        const TxResources r{tx->gas, tx->da_bytes, tx->commit_share_wei, tx->settle_share_wei, tx->priority_fee_wei};
        const auto q = tx_fee(r, l2_base_fee_wei, blob_price_wei, scalar);
        *out = {q.l2_fee, q.l1_fee, q.total};
    });
}

rl_status rl_dos_simulate(const rl_config* config, const rl_scenario* scenario, rl_trajectory** out)
{
    return guarded([&] {
        require(config, scenario, out);
        *out = nullptr;
        make_trajectory(simulate_dos(config->rollup, config->l1, scenario->file.scenario), out);
    });
}

rl_status rl_dos_simulate_mitigated(const rl_config* config, const rl_scenario* scenario,
    double utilization_target, double adjustment_coefficient, rl_trajectory** out)
{
    return guarded([&] {
        require(config, scenario, out);
        *out = nullptr;
        MitigatedDaPrice m;
        m.rho_l2_blob = config->l1.rho_blob_0;
        m.utilization_target = utilization_target;
        m.adjustment_coefficient = adjustment_coefficient;
        if (!(utilization_target > 0 && utilization_target <= 1) || !(adjustment_coefficient >= 0))
            throw Error{ErrorKind::invalid_argument, "target must be in (0, 1] and coefficient >= 0"};
        make_trajectory(simulate_dos_mitigated(config->rollup, config->l1, scenario->file.scenario, m), out);
    });
}

rl_status rl_finality_trajectory(
    const rl_config* config, double budget_wei, double priority_fee_wei, rl_trajectory** out)
{
    return guarded([&] {
        require(config, out);
        *out = nullptr;
        make_trajectory(amplified_trajectory(config->rollup, budget_wei, config->l1, priority_fee_wei), out);
    });
}

void rl_trajectory_destroy(rl_trajectory* trajectory)
{
    delete trajectory;
}

size_t rl_trajectory_size(const rl_trajectory* trajectory)
{
    return trajectory ? trajectory->t.records.size() : 0;
}

rl_status rl_trajectory_at(const rl_trajectory* trajectory, size_t index, rl_interval* out)
{
    return guarded([&] {
        require(trajectory, out);
        if (index >= trajectory->t.records.size())
            throw Error{ErrorKind::invalid_argument, "interval index out of range"};
        const auto& r = trajectory->t.records[index];
        *out = {r.block, r.price, r.cost.c_blobs, r.cost.c_calldata, r.cost.c_txs, r.cost.c_batches, r.cost.total,
            r.cumulative, r.blobs_posted, r.batches_committed, r.backlog, r.l2_blob_price};
    });
}

rl_status rl_trajectory_summary_get(const rl_trajectory* trajectory, rl_trajectory_summary* out)
{
    return guarded([&] {
        require(trajectory, out);
        const auto& t = trajectory->t;
        *out = {t.blocks_sustained, t.total_spent, t.priced_out, t.escalating, cost_is_flat(t)};
    });
}

const char* rl_trajectory_caveat(const rl_trajectory* trajectory)
{
    return trajectory ? trajectory->t.caveat.c_str() : "";
}

rl_status rl_trajectory_write_csv(const rl_trajectory* trajectory, const char* path)
{
    return guarded([&] {
        require(trajectory, path);
        auto out = open_out(path);
        write_trajectory_csv(out, trajectory->t);
        finish(out, path);
    });
}

rl_status rl_direct_l1_delay(const rl_config* config, double budget_wei, rl_direct_delay_result* out)
{
    return guarded([&] {
        require(config, out);
        const auto d = direct_l1_delay(budget_wei, config->l1);
        *out = {d.budget, d.k_l1, d.k_blocks, d.total_blocks, d.simulated_blocks};
    });
}

rl_status rl_amplified_delay(const rl_config* config, double budget_wei, double priority_fee_wei,
    uint32_t delay_blocks, rl_amplified_delay_result* out)
{
    return guarded([&] {
        require(config, out);
        const auto a = delayed_amplified_delay(config->rollup, budget_wei, config->l1, delay_blocks, priority_fee_wei);
        *out = {a.budget, a.susceptible, a.t_batches, a.k_l1, a.total_blocks, a.amplification, a.simulated_blocks};
    });
}

rl_status rl_econ_preset(const char* name, rl_econ_params* out)
{
    return guarded([&] {
        require(name, out);
        if (std::string_view{name} != "scroll-appendix-c")
            throw Error{ErrorKind::not_found, std::string{"unknown econ preset '"} + name + "'"};
        const EconParams p;
        *out = {p.tx_per_hour, p.batches_per_hour, p.intrinsic_gas, p.calldata_gas_per_tx, p.l2_gas_price,
            p.blob_fee_per_tx, p.commit_gas, p.l1_gas_price, p.eth_usd};
    });
}

rl_status rl_economic_damage(const rl_econ_params* params, rl_econ_report* out)
{
    return guarded([&] {
        require(params, out);
        const auto r = economic_damage(from_c(*params));
        *out = {r.intrinsic_hourly, r.calldata_hourly, r.blob_hourly, r.attacker_hourly, r.attacker_hourly_usd,
            r.commit_cost, r.commit_cost_usd, r.fees_per_batch_usd, r.outlay_per_batch_usd, r.loss_per_batch_usd,
            r.loss_hourly_usd};
    });
}

rl_status rl_econ_write(const rl_econ_params* params, const char* format, const char* path)
{
    return guarded([&] {
        require(params, format, path);
        const auto p = from_c(*params);
        const auto r = economic_damage(p);
        const std::string_view f{format};
        if (f != "csv" && f != "text")
            throw Error{ErrorKind::invalid_argument, "format must be csv or text"};
        auto out = open_out(path);
        if (f == "csv")
            write_econ_csv(out, r);
        else
            write_econ_text(out, r, p);
        finish(out, path);
    });
}

void rl_prover_rates_default(rl_prover_rates* out)
{
    if (out == nullptr)
        return;
    const ProverRates r;
    *out = {r.usd_per_hour, r.l2_base_fee, r.eth_usd, r.cycles_per_second};
}

size_t rl_prover_attack_count(void)
{
    return builtin_attacks().size();
}

const char* rl_prover_attack_name(size_t index)
{
    const auto& a = builtin_attacks();
    return index < a.size() ? a[index].name.c_str() : nullptr;
}

rl_status rl_prover_attack_report(const char* attack, const rl_prover_rates* rates, rl_prover_report* out)
{
    return guarded([&] {
        require(attack, rates, out);
        to_c(attack_report(find_attack(attack), normal_block_baseline(), from_c(*rates)), *out);
    });
}

rl_status rl_prover_profile_report(const char* profile_path, const rl_prover_rates* rates, rl_prover_report* out)
{
    return guarded([&] {
        require(profile_path, rates, out);
        const auto profile = load_profile_csv(profile_path);
        to_c(attack_report(std::filesystem::path{profile_path}.stem().string(), profile, normal_block_baseline(),
                 from_c(*rates)),
            *out);
    });
}

rl_status rl_prover_write_csv(const rl_prover_report* rows, size_t count, const char* path)
{
    return guarded([&] {
        require(path);
        if (count > 0)
            require(rows);
        std::vector<ProverReport> v;
        for (size_t i = 0; i < count; ++i)
        {
            const auto& r = rows[i];
            ProverReport p;
            p.name = std::string{r.name, strnlen(r.name, sizeof(r.name))};
            p.total_gas = r.total_gas;
            p.total_cycles = r.total_cycles;
            p.proving_time_s = r.proving_time_s;
            p.proving_cost_usd = r.proving_cost_usd;
            p.fees_usd = r.fees_usd;
            p.profit_loss_usd = r.profit_loss_usd;
            p.latency_delay_s = r.latency_delay_s;
            p.latency_delay_pct = r.latency_delay_pct;
            p.estimated = r.estimated != 0;
            p.over_gas_cap = r.over_gas_cap != 0;
            v.push_back(std::move(p));
        }
        auto out = open_out(path);
        write_prover_csv(out, v);
        finish(out, path);
    });
}

rl_status rl_gas_to_fill_blob(const char* schedule, double zero_ratio, double* out)
{
    return guarded([&] {
        require(schedule, out);
        *out = gas_to_fill_blob(schedule_by_name(schedule), zero_ratio);
    });
}

int rl_compressor_available(const char* compressor)
{
    if (compressor == nullptr)
        return 0;
    for (const auto& n : compressor_names())
    {
        if (n == compressor)
            return 1;
    }
    return 0;
}

rl_status rl_calldata_sweep_point(const char* schedule, const char* compressor, double zero_ratio, int quality,
    size_t payload_size, uint64_t first_seed, uint32_t seeds, rl_calldata_point* out)
{
    return guarded([&] {
        require(schedule, compressor, out);
        const auto c = make_compressor(compressor);
        const auto p = calldata_sweep_point(
            schedule_by_name(schedule), *c, zero_ratio, quality, payload_size, first_seed, seeds);
        *out = {p.zero_ratio, p.quality, p.mean_gas, p.expected_gas, p.mean_ratio};
    });
}

rl_status rl_payload_write(size_t size, double zero_ratio, uint64_t seed, const char* path)
{
    return guarded([&] {
        require(path);
        write_payload(gen_payload(size, zero_ratio, seed), path);
    });
}

}  // extern "C"
