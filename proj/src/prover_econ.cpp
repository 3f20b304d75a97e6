// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/config.hpp>
#include <rollup_lab/csv.hpp>
#include <rollup_lab/error.hpp>
#include <rollup_lab/prover_econ.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace rollup_lab
{
namespace
{
std::string normalize(std::string_view s)
{
    std::string out;
    for (const char c : s)
    {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        out.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}
}  // namespace

const std::vector<OpcodeCost>& load_tables()
{
    using enum CostTable;
    static const std::vector<OpcodeCost> rows{
        {"jumpdest", 1, 1039.8, 1039.79, highest_opcodes},
        {"difficulty", 2, 1192.0, 596.00, highest_opcodes},
        {"mulmod", 8, 4640.8, 580.10, highest_opcodes},
        {"calldatacopy", 3, 1733.8, 577.93, highest_opcodes},
        {"gasprice", 2, 1145.8, 572.88, highest_opcodes},
        {"address", 2, 1144.8, 572.38, highest_opcodes},
        {"coinbase", 2, 1141.3, 570.64, highest_opcodes},
        {"origin", 2, 1134.8, 567.42, highest_opcodes},
        {"create", 32000, 1679.5, 0.05, lowest_opcodes},
        {"create2", 32000, 1706.7, 0.05, lowest_opcodes},
        {"sstore", 21000, 4927.6, 0.23, lowest_opcodes},
        {"log4", 1875, 2744.2, 1.46, lowest_opcodes},
        {"log3", 1500, 2395.9, 1.60, lowest_opcodes},
        {"log2", 1125, 2291.3, 2.04, lowest_opcodes},
        {"log1", 750, 1914.5, 2.55, lowest_opcodes},
        {"log0", 375, 1604.1, 4.28, lowest_opcodes},
        {"modexp", 200, 592344.7, 2961.72, precompiles},
        {"bn-pair", 45000, 73896701.8, 1642.15, precompiles},
        {"bn-add", 150, 123223.0, 821.49, precompiles},
        {"bn-mul", 6000, 4412939.6, 735.49, precompiles},
        {"kzg-point", 50000, 9490921.2, 189.82, precompiles},
        {"identity", 15, 1531.0, 102.06, precompiles},
        {"sha256", 60, 3633.8, 60.56, precompiles},
        {"ecrecover", 3000, 48942.7, 16.31, precompiles},
    };
    return rows;
}

std::vector<OpcodeCost> opcode_rows()
{
    std::vector<OpcodeCost> out;
    for (const auto& r : load_tables())
    {
        if (r.table != CostTable::precompiles)
            out.push_back(r);
    }
    return out;
}

const OpcodeCost& find_opcode(std::string_view name)
{
    const auto key = normalize(name);
    for (const auto& r : load_tables())
    {
        if (r.name == key)
            return r;
    }
    throw Error{ErrorKind::not_found, "unknown opcode '" + std::string{name} + "'"};
}

std::vector<OpcodeCost> mispricing_rank(std::vector<OpcodeCost> table, bool ascending, std::size_t n)
{
    if (n > table.size())
        throw Error{ErrorKind::invalid_argument, "rank size exceeds table size"};
    std::sort(table.begin(), table.end(), [ascending](const OpcodeCost& l, const OpcodeCost& r) {
        if (l.cycles_per_gas != r.cycles_per_gas)
            return ascending ? l.cycles_per_gas < r.cycles_per_gas : l.cycles_per_gas > r.cycles_per_gas;
        return l.name < r.name;
    });
    table.resize(n);
    return table;
}

MedianReport median_cycles_per_gas(const std::vector<OpcodeCost>& table)
{
    if (table.empty())
        throw Error{ErrorKind::invalid_argument, "median of an empty table"};
    std::vector<double> v;
    for (const auto& r : table)
        v.push_back(r.cycles_per_gas);
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    MedianReport m;
    m.rows = n;
    m.median = n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
    return m;
}

double block_cycles(const BlockProfile& profile)
{
    std::vector<std::string> unknown;
    double cycles = 0;
    for (const auto& [name, count] : profile.entries)
    {
        if (count < 0)
            throw Error{ErrorKind::validation, "negative count for '" + name + "'"};
        try
        {
            cycles += count * find_opcode(name).cycles;
        }
        catch (const Error&)
        {
            unknown.push_back(name);
        }
    }
    if (!unknown.empty())
    {
        std::string msg = "unknown opcode(s):";
        for (const auto& u : unknown)
            msg += " " + u;
        throw Error{ErrorKind::not_found, msg};
    }
    return cycles;
}

double block_gas(const BlockProfile& profile)
{
    if (profile.declared_gas)
        return *profile.declared_gas;
    double gas = 0;
    for (const auto& [name, count] : profile.entries)
        gas += count * find_opcode(name).gas;
    return gas;
}

std::vector<std::string> profile_warnings(const BlockProfile& profile)
{
    std::vector<std::string> w;
    if (block_gas(profile) > block_gas_cap)
        w.push_back("block gas " + format_number(block_gas(profile)) + " exceeds the 36M gas cap");
    return w;
}

BlockProfile parse_profile_csv(std::istream& in)
{
    BlockProfile p;
    std::map<std::string, double> counts;
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(in, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw Error{ErrorKind::parse, "profile line " + std::to_string(lineno) + ": expected opcode,count"};
        const auto name = normalize(line.substr(0, comma));
        const auto value = line.substr(comma + 1);
        const bool header = first && name == "opcode";
        first = false;
        if (header)
            continue;
        const double count = parse_number(value, "count");
        if (count < 0)
            throw Error{ErrorKind::validation, "profile line " + std::to_string(lineno) + ": negative count"};
        if (name == "declared-gas")
            p.declared_gas = count;
        else
            counts[name] += count;
    }
    p.entries.assign(counts.begin(), counts.end());
    block_cycles(p);  // reject unknown names up front
    return p;
}

BlockProfile load_profile_csv(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw Error{ErrorKind::io, "cannot open profile '" + path.string() + "'"};
    return parse_profile_csv(in);
}

double proving_time(double cycles, double cycles_per_second)
{
    if (!(cycles_per_second > 0))
        throw Error{ErrorKind::invalid_argument, "proving rate must be positive"};
    return cycles / cycles_per_second;
}

double proving_cost(double seconds, double usd_per_hour)
{
    if (seconds < 0 || usd_per_hour < 0)
        throw Error{ErrorKind::invalid_argument, "proving time and price must be non-negative"};
    return seconds * usd_per_hour / 3600;
}

double fees_collected(double gas, Money l2_base_fee, double eth_usd)
{
    if (gas < 0 || l2_base_fee < 0 || eth_usd < 0)
        throw Error{ErrorKind::invalid_argument, "fee inputs must be non-negative"};
    return to_usd(gas * l2_base_fee, eth_usd);
}

ProverBaseline normal_block_baseline()
{
    return {};
}

const std::vector<AttackMeasurement>& builtin_attacks()
{
    static const std::vector<AttackMeasurement> rows{
        // The prover crashed on MODEXP; its time is extrapolated from cycles.
        {"MODEXP", 35.49e6, 26640.26e6, std::nullopt, 0.8713e6},
        {"SHA256", 35.49e6, 2110.15e6, 1501, std::nullopt},
        {"BN_PAIRING", 35.51e6, 1904.79e6, 3966, std::nullopt},
        {"MCOPY", 34.08e6, 1061.48e6, 808, std::nullopt},
        {"KECCAK", 35.49e6, 988.12e6, 873, std::nullopt},
        {"CALLDATACOPY", 33.52e6, 946.19e6, 641, std::nullopt},
        {"JUMPDEST", 34.08e6, 864.25e6, 602, std::nullopt},
        {"ECRECOVER", 33.52e6, 654.72e6, 1729, std::nullopt},
        {"BN_MUL", 33.52e6, 273.10e6, 199, std::nullopt},
    };
    return rows;
}

const AttackMeasurement& find_attack(std::string_view name)
{
    const auto key = normalize(name);
    for (const auto& a : builtin_attacks())
    {
        if (normalize(a.name) == key)
            return a;
    }
    throw Error{ErrorKind::not_found, "unknown attack '" + std::string{name} + "'"};
}

ProverReport attack_report(const AttackMeasurement& m, const ProverBaseline& baseline, const ProverRates& rates)
{
    ProverReport r;
    r.name = m.name;
    r.total_gas = m.gas;
    r.total_cycles = m.cycles;
    r.estimated = !m.time_s;
    r.proving_time_s = m.time_s ? *m.time_s : proving_time(m.cycles, m.cycles_per_second.value_or(rates.cycles_per_second));
    r.proving_cost_usd = proving_cost(r.proving_time_s, rates.usd_per_hour);
    r.fees_usd = fees_collected(m.gas, rates.l2_base_fee, rates.eth_usd);
    r.profit_loss_usd = r.fees_usd - r.proving_cost_usd;
    r.latency_delay_s = r.proving_time_s - baseline.median_time_s;
    r.latency_delay_pct = r.latency_delay_s / baseline.median_time_s * 100;
    r.over_gas_cap = m.gas > block_gas_cap;
    return r;
}

ProverReport attack_report(
    std::string name, const BlockProfile& profile, const ProverBaseline& baseline, const ProverRates& rates)
{
    AttackMeasurement m;
    m.name = std::move(name);
    m.cycles = block_cycles(profile);
    m.gas = block_gas(profile);
    return attack_report(m, baseline, rates);
}

void write_prover_csv(std::ostream& out, const std::vector<ProverReport>& rows)
{
    out << "attack,total_gas_m,total_cycles_m,proving_time_s,proving_cost_usd,fees_usd,profit_loss_usd,"
           "latency_delay_s,latency_delay_pct,estimated\n";
    for (const auto& r : rows)
    {
        out << r.name << ',' << format_number(r.total_gas / 1e6) << ',' << format_number(r.total_cycles / 1e6) << ','
            << format_fixed(r.proving_time_s, 1) << ',' << format_fixed(r.proving_cost_usd, 2) << ','
            << format_fixed(r.fees_usd, 2) << ',' << format_fixed(r.profit_loss_usd, 2) << ','
            << format_fixed(r.latency_delay_s, 1) << ',' << format_fixed(r.latency_delay_pct, 1) << ','
            << (r.estimated ? 1 : 0) << '\n';
    }
}
}  // namespace rollup_lab
