// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/config.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>

namespace rollup_lab
{
namespace
{
std::string lower(std::string_view s)
{
    std::string out{s};
    std::transform(out.begin(), out.end(), out.begin(),
        [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_validation(const std::string& field, const std::string& why)
{
    throw Error{ErrorKind::validation, field + ": " + why};
}

RollupConfig make(std::string name, double bt_l2, double max_blobs, std::optional<double> block_limit,
    double tx_to_fill, double commit_gwei, double l2_gwei, std::string note = {})
{
    RollupConfig r;
    r.name = std::move(name);
    r.bt_l2 = bt_l2;
    r.max_blobs_per_batch = max_blobs;
    r.block_blob_limit = block_limit;
    r.tx_to_fill = tx_to_fill;
    r.commit_cost_c_batch = gwei(commit_gwei);
    r.l2_base_fee = gwei(l2_gwei);
    r.ordering_note = std::move(note);
    return r;
}

double nonnegative_integer(std::string_view text, std::string_view what)
{
    const double v = parse_number(text, what);
    if (v < 0 || v != std::floor(v) || v > 9.0e15)
        throw Error{ErrorKind::validation, std::string{what} + ": expected a non-negative integer"};
    return v;
}

using Setter = std::function<void(RollupConfig&, L1Params&, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters()
{
    static const std::vector<std::pair<std::string, Setter>> table = [] {
        std::vector<std::pair<std::string, Setter>> t;
        auto num = [&t](std::string name, auto member_fn) {
            t.emplace_back(name, [name, member_fn](RollupConfig& r, L1Params& l, std::string_view v) {
                member_fn(r, l, parse_number(v, name));
            });
        };
        num("bt_l2", [](RollupConfig& r, L1Params&, double v) { r.bt_l2 = v; });
        num("max_blobs_per_batch", [](RollupConfig& r, L1Params&, double v) { r.max_blobs_per_batch = v; });
        t.emplace_back("block_blob_limit", [](RollupConfig& r, L1Params&, std::string_view v) {
            if (lower(v) == "none")
                r.block_blob_limit.reset();
            else
                r.block_blob_limit = parse_number(v, "block_blob_limit");
        });
        num("tx_to_fill", [](RollupConfig& r, L1Params&, double v) { r.tx_to_fill = v; });
        num("commit_cost_gwei", [](RollupConfig& r, L1Params&, double v) { r.commit_cost_c_batch = gwei(v); });
        num("l2_base_fee_gwei", [](RollupConfig& r, L1Params&, double v) { r.l2_base_fee = gwei(v); });
        num("scalar_blob", [](RollupConfig& r, L1Params&, double v) { r.scalar_blob = v; });
        num("bt_l1", [](RollupConfig&, L1Params& l, double v) { l.bt_l1 = v; });
        num("blob_target", [](RollupConfig&, L1Params& l, double v) { l.blob_target = v; });
        num("blob_limit", [](RollupConfig&, L1Params& l, double v) { l.blob_limit = v; });
        num("u_blob", [](RollupConfig&, L1Params& l, double v) { l.u_blob = v; });
        num("rho_blob_0_wei", [](RollupConfig&, L1Params& l, double v) { l.rho_blob_0 = v; });
        num("blob_floor_wei", [](RollupConfig&, L1Params& l, double v) { l.blob_floor = v; });
        num("gas_per_blob_calldata", [](RollupConfig&, L1Params& l, double v) { l.gas_per_blob_calldata = v; });
        num("gas_per_blob_fill", [](RollupConfig&, L1Params& l, double v) { l.gas_per_blob_fill = v; });
        num("blob_gas_per_blob", [](RollupConfig&, L1Params& l, double v) { l.blob_gas_per_blob = v; });
        num("intrinsic_tx_gas", [](RollupConfig&, L1Params& l, double v) { l.intrinsic_tx_gas = v; });
        t.emplace_back("decay", [](RollupConfig&, L1Params& l, std::string_view v) {
            const auto s = lower(v);
            if (s == "inverse")
                l.decay = DecayRule::inverse;
            else if (s == "fixed")
                l.decay = DecayRule::fixed;
            else if (s == "off")
                l.decay = DecayRule::off;
            else
                throw Error{ErrorKind::parse, "decay: expected inverse, fixed or off"};
        });
        num("decay_fixed_factor", [](RollupConfig&, L1Params& l, double v) { l.decay_fixed_factor = v; });
        return t;
    }();
    return table;
}
}  // namespace

double parse_number(std::string_view text, std::string_view what)
{
    const auto s = trim(text);
    double v = 0;
    const char* const end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw Error{ErrorKind::parse, std::string{what} + ": not a number: '" + std::string{s} + "'"};
    return v;
}

void validate(const RollupConfig& r)
{
    if (!(r.bt_l2 > 0))
        fail_validation("bt_l2", "must be positive");
    if (!(r.max_blobs_per_batch >= 1))
        fail_validation("max_blobs_per_batch", "must be at least 1");
    if (!(r.tx_to_fill >= 1))
        fail_validation("tx_to_fill", "must be at least 1");
    if (r.block_blob_limit)
    {
        if (!(*r.block_blob_limit > 0))
            fail_validation("block_blob_limit", "must be positive");
        if (*r.block_blob_limit > r.max_blobs_per_batch)
            fail_validation("block_blob_limit", "exceeds max_blobs_per_batch");
    }
    if (!(r.commit_cost_c_batch >= 0))
        fail_validation("commit_cost_gwei", "must be non-negative");
    if (!(r.l2_base_fee >= 0))
        fail_validation("l2_base_fee_gwei", "must be non-negative");
    if (!(r.scalar_blob >= 0))
        fail_validation("scalar_blob", "must be non-negative");
}

void validate(const L1Params& l)
{
    if (!(l.bt_l1 > 0))
        fail_validation("bt_l1", "must be positive");
    if (!(l.blob_target >= 0))
        fail_validation("blob_target", "must be non-negative");
    if (!(l.blob_target < l.blob_limit))
        fail_validation("blob_target", "must be below blob_limit");
    if (!(l.u_blob > 1))
        fail_validation("u_blob", "must exceed 1");
    if (!(l.blob_floor >= 0))
        fail_validation("blob_floor_wei", "must be non-negative");
    if (!(l.rho_blob_0 > 0))
        fail_validation("rho_blob_0_wei", "must be positive");
    if (!(l.rho_blob_0 >= l.blob_floor))
        fail_validation("rho_blob_0_wei", "must not be below blob_floor_wei");
    if (!(l.gas_per_blob_calldata >= 0))
        fail_validation("gas_per_blob_calldata", "must be non-negative");
    if (!(l.gas_per_blob_fill >= 0))
        fail_validation("gas_per_blob_fill", "must be non-negative");
    if (!(l.blob_gas_per_blob > 0))
        fail_validation("blob_gas_per_blob", "must be positive");
    if (!(l.intrinsic_tx_gas >= 0))
        fail_validation("intrinsic_tx_gas", "must be non-negative");
    if (!(l.decay_fixed_factor > 0 && l.decay_fixed_factor <= 1))
        fail_validation("decay_fixed_factor", "must be in (0, 1]");
}

const std::vector<RollupConfig>& builtin_registry()
{
    static const std::vector<RollupConfig> registry{
        make("scroll", 3, 6, std::nullopt, 1, 75'840, 0.039),
        make("linea", 2, 6, 1, 2, 400'030, 0.083),
        make("era", 1, 1, std::nullopt, 1, 232'524, 0.045),
        make("arbitrum", 0.25, 3, std::nullopt, 1, 168'858, 0.014,
            "FCFS ordering and a speed-limit base fee make DA saturation significantly harder; "
            "the speed-limit escalation is not modelled"),
        make("optimism", 2, 6, 2, 2, 21'000, 0.012),
        make("base", 2, 7, std::nullopt, 1, 21'000, 0.002),
    };
    return registry;
}

RollupConfig throttle_mode(const RollupConfig& rollup)
{
    auto t = rollup;
    t.name = rollup.name + "-throttle";
    t.block_blob_limit = 1;
    t.tx_to_fill = 2;
    return t;
}

RollupConfig find_rollup(std::string_view name)
{
    auto key = lower(trim(name));
    if (key == "zksync-era" || key == "zksync")
        key = "era";
    constexpr std::string_view suffix = "-throttle";
    const bool throttled = key.size() > suffix.size() && key.ends_with(suffix);
    if (throttled)
        key.resize(key.size() - suffix.size());
    for (const auto& r : builtin_registry())
    {
        if (r.name == key)
            return throttled ? throttle_mode(r) : r;
    }
    throw Error{ErrorKind::not_found, "unknown rollup '" + std::string{name} + "'"};
}

L1Params post_pectra(L1Params l1)
{
    l1.gas_per_blob_calldata = l1.gas_per_blob_fill;
    return l1;
}

const std::vector<std::string>& override_fields()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, _] : setters())
            n.push_back(name);
        return n;
    }();
    return names;
}

void apply_override(RollupConfig& rollup, L1Params& l1, std::string_view field, std::string_view value)
{
    for (const auto& [name, set] : setters())
    {
        if (name == field)
            return set(rollup, l1, value);
    }
    throw Error{ErrorKind::not_found, "unknown override field '" + std::string{field} + "'"};
}

void validate(const AttackScenario& s)
{
    if (!(s.budget > 0))
        fail_validation("budget_eth", "must be positive");
    if (!(s.priority_fee >= 0))
        fail_validation("priority_fee_gwei", "must be non-negative");
    if (!(s.eth_usd > 0))
        fail_validation("eth_usd", "must be positive");
}

void ScenarioFile::resolve(RollupConfig& rollup_out, L1Params& l1_out, std::string_view fallback) const
{
    const std::string_view name = rollup.empty() ? fallback : std::string_view{rollup};
    if (name.empty())
        throw Error{ErrorKind::validation, "rollup: no rollup named"};
    auto r = find_rollup(name);
    L1Params l;
    for (const auto& [field, value] : overrides)
        apply_override(r, l, field, value);
    validate(r);
    validate(l);
    rollup_out = std::move(r);
    l1_out = l;
}

void set_scenario_key(ScenarioFile& file, std::string_view key, std::string_view value)
{
    auto& s = file.scenario;
    if (key == "budget_eth")
    {
        const double v = parse_number(value, key);
        if (!(v > 0))
            fail_validation("budget_eth", "must be positive");
        s.budget = eth(v);
    }
    else if (key == "priority_fee_gwei")
    {
        const double v = parse_number(value, key);
        if (v < 0)
            fail_validation("priority_fee_gwei", "must be non-negative");
        s.priority_fee = gwei(v);
    }
    else if (key == "duration_blocks")
        s.duration = static_cast<std::uint64_t>(nonnegative_integer(value, key));
    else if (key == "delay_blocks")
    {
        const double v = nonnegative_integer(value, key);
        if (v > 1e6)
            fail_validation("delay_blocks", "too large");
        s.delay = static_cast<std::uint32_t>(v);
    }
    else if (key == "eth_usd")
    {
        const double v = parse_number(value, key);
        if (!(v > 0))
            fail_validation("eth_usd", "must be positive");
        s.eth_usd = v;
    }
    else if (key == "rollup")
    {
        find_rollup(value);
        file.rollup = lower(trim(value));
    }
    else if (key.starts_with("override."))
    {
        const auto field = key.substr(9);
        const auto& fields = override_fields();
        if (std::find(fields.begin(), fields.end(), field) == fields.end())
            throw Error{ErrorKind::parse, "unknown key '" + std::string{key} + "'"};
        // Parse eagerly so bad values are reported at load time.
        RollupConfig r;
        L1Params l;
        apply_override(r, l, field, value);
        file.overrides[std::string{field}] = std::string{trim(value)};
    }
    else
        throw Error{ErrorKind::parse, "unknown key '" + std::string{key} + "'"};
}

ScenarioFile parse_scenario(std::istream& in)
{
    ScenarioFile file;
    std::vector<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        std::string_view view{line};
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw Error{ErrorKind::parse, "line " + std::to_string(lineno) + ": expected key = value"};
        const auto key = std::string{trim(view.substr(0, eq))};
        const auto value = trim(view.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error{ErrorKind::parse, "line " + std::to_string(lineno) + ": empty key or value"};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw Error{ErrorKind::parse, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'"};
        seen.push_back(key);
        try
        {
            set_scenario_key(file, key, value);
        }
        catch (const Error& e)
        {
            throw Error{e.kind(), "line " + std::to_string(lineno) + ": " + e.what()};
        }
    }
    return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw Error{ErrorKind::io, "cannot open scenario file '" + path.string() + "'"};
    return parse_scenario(in);
}
}  // namespace rollup_lab
