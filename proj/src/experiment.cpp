// uavcovert - covert link planning for UAV-assisted satellite downlinks
// Copyright (C) 2026 The uavcovert authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavcovert/experiment.hpp"

#include "uavcovert/covert_analysis.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uavcovert::experiment
{

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

namespace
{

using Converter = double (*)(double);

double identity(double x) { return x; }
double milli(double x) { return x * 1e-3; }
double kilo(double x) { return x * 1e3; }
double mega(double x) { return x * 1e6; }
double giga(double x) { return x * 1e9; }
double dbw_to_watt(double x) { return db_to_linear(x); }

const std::map<std::string, Converter> &units_for(Dimension dim)
{
    static const std::map<Dimension, std::map<std::string, Converter>> table{
        {Dimension::power, {{"W", identity}, {"mW", milli}, {"dBm", dbm_to_watt}, {"dBW", dbw_to_watt}}},
        {Dimension::gain, {{"linear", identity}, {"dB", db_to_linear}, {"dBi", db_to_linear}}},
        {Dimension::frequency, {{"Hz", identity}, {"kHz", kilo}, {"MHz", mega}, {"GHz", giga}}},
        {Dimension::length, {{"m", identity}, {"km", kilo}}},
        {Dimension::angle, {{"rad", identity}, {"deg", deg_to_rad}}},
        {Dimension::rate, {{"bps/Hz", identity}}},
        {Dimension::ratio, {{"1", identity}}},
    };
    return table.at(dim);
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    if (!obj.is_object())
        throw std::invalid_argument(where + ": expected an object");
    for (const auto &item : obj.items())
        if (!allowed.contains(item.key()))
            throw std::invalid_argument(where + ": unknown field '" + item.key() + "'");
}

const json &field(const json &obj, const std::string &key)
{
    if (!obj.contains(key))
        throw std::invalid_argument("scenario: missing field '" + key + "'");
    return obj.at(key);
}

json quantity(double v, Dimension dim) { return {{"value", v}, {"unit", si_unit(dim)}}; }

channel::GroundPos position(const json &q, const std::string &where)
{
    reject_unknown(q, {"value", "unit"}, where);
    const auto &v = field(q, "value");
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument(where + ": position must be [x, y]");
    const json unit = field(q, "unit");
    return {to_si({{"value", v[0]}, {"unit", unit}}, Dimension::length),
            to_si({{"value", v[1]}, {"unit", unit}}, Dimension::length)};
}

json position_json(channel::GroundPos p) { return {{"value", {p.x, p.y}}, {"unit", "m"}}; }

channel::SRParams shadowing_row(const std::string &name)
{
    if (name == "light")
        return channel::SRParams::light();
    if (name == "average")
        return channel::SRParams::average();
    if (name == "heavy")
        return channel::SRParams::heavy();
    throw std::invalid_argument("unknown shadowing row '" + name + "'");
}

std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

} // namespace

double to_si(const json &q, Dimension dim)
{
    if (!q.is_object() || !q.contains("value") || !q.contains("unit"))
        throw std::invalid_argument("quantity needs both 'value' and 'unit': " + q.dump());
    reject_unknown(q, {"value", "unit"}, "quantity");
    if (!q.at("value").is_number() || !q.at("unit").is_string())
        throw std::invalid_argument("quantity value must be a number and unit a string: " + q.dump());
    const auto unit = q.at("unit").get<std::string>();
    const auto &units = units_for(dim);
    const auto it = units.find(unit);
    if (it == units.end())
        throw std::invalid_argument("unit '" + unit + "' does not fit expected dimension " + si_unit(dim));
    return it->second(q.at("value").get<double>());
}

std::string si_unit(Dimension dim)
{
    switch (dim)
    {
    case Dimension::power:
        return "W";
    case Dimension::gain:
        return "linear";
    case Dimension::frequency:
        return "Hz";
    case Dimension::length:
        return "m";
    case Dimension::angle:
        return "rad";
    case Dimension::rate:
        return "bps/Hz";
    case Dimension::ratio:
        return "1";
    }
    return "?";
}

std::vector<channel::GroundPos> place_ues(const UePlacementSpec &spec, std::uint64_t seed)
{
    if (!spec.uniform)
        return spec.positions;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-spec.side / 2.0, spec.side / 2.0);
    std::vector<channel::GroundPos> ues;
    for (int k = 0; k < spec.count; ++k)
    {
        const double x = coord(rng);
        const double y = coord(rng);
        ues.push_back({x, y});
    }
    return ues;
}

ScenarioFile parse_scenario(const json &doc)
{
    reject_unknown(doc,
                   {"shadowing", "carrier_frequency", "satellite_distance", "antenna_gain", "beta0_chi", "beta0_kappa",
                    "phi_min", "sigma_kappa2", "sigma_b2", "sigma_w2", "varpi", "eps", "p_tot", "pa_max", "h_min",
                    "h_max", "r_tg", "delta", "i_max", "bob", "willie", "ue_placement", "rng_seed"},
                   "scenario");
    ScenarioFile sf;
    auto &s = sf.scenario;

    const auto &sh = field(doc, "shadowing");
    if (sh.is_string())
    {
        sf.shadowing = sh.get<std::string>();
        s.sr = shadowing_row(sf.shadowing);
    }
    else
    {
        reject_unknown(sh, {"b", "m", "omega"}, "shadowing");
        sf.shadowing = "custom";
        s.sr = {field(sh, "b").get<double>(), field(sh, "m").get<double>(), field(sh, "omega").get<double>()};
    }
    s.sr.validate();
    s.gamma = channel::gamma_from_sr(s.sr);

    s.sat = channel::SatelliteLink::make(to_si(field(doc, "carrier_frequency"), Dimension::frequency),
                                         to_si(field(doc, "satellite_distance"), Dimension::length),
                                         to_si(field(doc, "antenna_gain"), Dimension::gain));
    s.budget.beta0_chi = to_si(field(doc, "beta0_chi"), Dimension::gain);
    s.budget.beta0_kappa = to_si(field(doc, "beta0_kappa"), Dimension::gain);
    s.budget.phi_min = to_si(field(doc, "phi_min"), Dimension::angle);
    s.sigma_kappa2 = to_si(field(doc, "sigma_kappa2"), Dimension::power);
    s.sigma_b2 = to_si(field(doc, "sigma_b2"), Dimension::power);
    s.sigma_w2 = to_si(field(doc, "sigma_w2"), Dimension::power);
    s.varpi = to_si(field(doc, "varpi"), Dimension::ratio);
    s.eps = to_si(field(doc, "eps"), Dimension::ratio);
    s.p_tot = to_si(field(doc, "p_tot"), Dimension::power);
    s.pa_max = to_si(field(doc, "pa_max"), Dimension::power);
    s.h_min = to_si(field(doc, "h_min"), Dimension::length);
    s.h_max = to_si(field(doc, "h_max"), Dimension::length);
    s.r_tg = to_si(field(doc, "r_tg"), Dimension::rate);
    s.delta = to_si(field(doc, "delta"), Dimension::ratio);
    s.i_max = field(doc, "i_max").get<int>();
    s.bob = position(field(doc, "bob"), "bob");
    s.willie = position(field(doc, "willie"), "willie");
    sf.rng_seed = field(doc, "rng_seed").get<std::uint64_t>();

    const auto &up = field(doc, "ue_placement");
    reject_unknown(up, {"uniform_square", "explicit"}, "ue_placement");
    if (up.size() != 1)
        throw std::invalid_argument("ue_placement: give exactly one of 'uniform_square' or 'explicit'");
    if (up.contains("uniform_square"))
    {
        const auto &u = up.at("uniform_square");
        reject_unknown(u, {"side", "count"}, "uniform_square");
        sf.ue_placement.uniform = true;
        sf.ue_placement.side = to_si(field(u, "side"), Dimension::length);
        sf.ue_placement.count = field(u, "count").get<int>();
        if (!(sf.ue_placement.side > 0.0) || sf.ue_placement.count < 0)
            throw std::invalid_argument("uniform_square: side must be positive and count non-negative");
    }
    else
    {
        sf.ue_placement.uniform = false;
        const auto &list = up.at("explicit");
        if (!list.is_array())
            throw std::invalid_argument("ue_placement.explicit must be a list of positions");
        for (const auto &p : list)
            sf.ue_placement.positions.push_back(position(p, "ue"));
        sf.ue_placement.count = static_cast<int>(sf.ue_placement.positions.size());
    }
    s.ues = place_ues(sf.ue_placement, sf.rng_seed);
    s.validate();
    return sf;
}

ScenarioFile load_scenario(const std::filesystem::path &path) { return parse_scenario(read_json(path)); }

void reseed(ScenarioFile &sf, std::uint64_t seed)
{
    sf.rng_seed = seed;
    sf.scenario.ues = place_ues(sf.ue_placement, seed);
}

json to_json(const ScenarioFile &sf)
{
    const auto &s = sf.scenario;
    json doc;
    if (sf.shadowing == "custom")
        doc["shadowing"] = {{"b", s.sr.b}, {"m", s.sr.m}, {"omega", s.sr.omega}};
    else
        doc["shadowing"] = sf.shadowing;
    doc["carrier_frequency"] = quantity(s.sat.fc, Dimension::frequency);
    doc["satellite_distance"] = quantity(s.sat.d, Dimension::length);
    doc["antenna_gain"] = quantity(s.sat.gain, Dimension::gain);
    doc["beta0_chi"] = quantity(s.budget.beta0_chi, Dimension::gain);
    doc["beta0_kappa"] = quantity(s.budget.beta0_kappa, Dimension::gain);
    doc["phi_min"] = quantity(s.budget.phi_min, Dimension::angle);
    doc["sigma_kappa2"] = quantity(s.sigma_kappa2, Dimension::power);
    doc["sigma_b2"] = quantity(s.sigma_b2, Dimension::power);
    doc["sigma_w2"] = quantity(s.sigma_w2, Dimension::power);
    doc["varpi"] = quantity(s.varpi, Dimension::ratio);
    doc["eps"] = quantity(s.eps, Dimension::ratio);
    doc["p_tot"] = quantity(s.p_tot, Dimension::power);
    doc["pa_max"] = quantity(s.pa_max, Dimension::power);
    doc["h_min"] = quantity(s.h_min, Dimension::length);
    doc["h_max"] = quantity(s.h_max, Dimension::length);
    doc["r_tg"] = quantity(s.r_tg, Dimension::rate);
    doc["delta"] = quantity(s.delta, Dimension::ratio);
    doc["i_max"] = s.i_max;
    doc["bob"] = position_json(s.bob);
    doc["willie"] = position_json(s.willie);
    doc["rng_seed"] = sf.rng_seed;
    if (sf.ue_placement.uniform)
        doc["ue_placement"] = {
            {"uniform_square", {{"side", quantity(sf.ue_placement.side, Dimension::length)},
                                {"count", sf.ue_placement.count}}}};
    else
    {
        json list = json::array();
        for (const auto &p : sf.ue_placement.positions)
            list.push_back(position_json(p));
        doc["ue_placement"] = {{"explicit", list}};
    }
    return doc;
}

std::string scenario_hash(const ScenarioFile &sf)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(sf).dump())
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return hex64(h);
}

json to_json(const planner::Solution &sol)
{
    json iters = json::array();
    for (const auto &it : sol.iterations)
        iters.push_back({{"iteration", it.iteration},
                         {"rb", it.rb},
                         {"inner_iterations", it.inner_iterations},
                         {"inner_value", it.inner_value}});
    return {
        {"algorithm", sol.algorithm},
        {"status", planner::to_string(sol.status)},
        {"reason", sol.reason},
        {"rb", sol.rb},
        {"placement", {{"x", sol.placement.q.x}, {"y", sol.placement.q.y}, {"h", sol.placement.h}}},
        {"powers", {{"pk", sol.powers.pk}, {"pj_hat", sol.powers.pj_hat}, {"pa", sol.powers.pa}}},
        {"trace", sol.trace},
        {"iterations", iters},
    };
}

planner::Solution solution_from_json(const json &doc)
{
    try
    {
        planner::Solution sol;
        sol.algorithm = doc.at("algorithm").get<std::string>();
        const auto status = doc.at("status").get<std::string>();
        if (status == "converged")
            sol.status = planner::SolveStatus::converged;
        else if (status == "iteration_capped")
            sol.status = planner::SolveStatus::iteration_capped;
        else if (status == "infeasible")
            sol.status = planner::SolveStatus::infeasible;
        else
            throw std::invalid_argument("unknown status '" + status + "'");
        sol.reason = doc.value("reason", "");
        sol.rb = doc.at("rb").get<double>();
        const auto &pl = doc.at("placement");
        sol.placement = {{pl.at("x").get<double>(), pl.at("y").get<double>()}, pl.at("h").get<double>()};
        const auto &pw = doc.at("powers");
        sol.powers.pk = pw.at("pk").get<std::vector<double>>();
        sol.powers.pj_hat = pw.at("pj_hat").get<double>();
        sol.powers.pa = pw.at("pa").get<double>();
        sol.trace = doc.value("trace", std::vector<double>{});
        for (const auto &it : doc.value("iterations", json::array()))
            sol.iterations.push_back({it.at("iteration").get<int>(), it.at("rb").get<double>(),
                                      it.at("inner_iterations").get<int>(), it.at("inner_value").get<double>()});
        return sol;
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("malformed solution document: ") + e.what());
    }
}

json to_json(const planner::ValidationReport &rep)
{
    return {{"trials", rep.trials},       {"xi_mc", rep.xi_mc},
            {"xi_stderr", rep.xi_stderr}, {"rate_mc", rep.rate_mc},
            {"rate_stderr", rep.rate_stderr}, {"bound", rep.bound},
            {"rb_mean_fading", rep.rb_mean_fading}, {"threshold", rep.threshold},
            {"pass", rep.pass}};
}

json ResultRecord::to_json() const
{
    return {{"run_id", run_id},   {"scenario_hash", scenario_hash}, {"command", command},
            {"seed", seed},       {"outputs", outputs},             {"wall_time", wall_time}};
}

ResultRecord make_record(const ScenarioFile &sf, std::string command, json outputs, double wall_time)
{
    std::random_device rd;
    const std::uint64_t id = (static_cast<std::uint64_t>(rd()) << 32) ^ rd() ^
                             static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
    return {hex64(id), scenario_hash(sf), std::move(command), sf.rng_seed, std::move(outputs), wall_time};
}

void append_record(const std::filesystem::path &out_dir, const ResultRecord &rec)
{
    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / "results.jsonl";
    std::ofstream os(path, std::ios::app);
    if (!os)
        throw std::runtime_error("cannot append to " + path.string());
    os << rec.to_json().dump() << '\n';
}

std::vector<DepSweepRow> cmd_dep_sweep(const ScenarioFile &sf, const std::vector<double> &eps_grid,
                                       const std::vector<std::string> &rows, int trials, std::uint64_t seed)
{
    if (trials < 2)
        throw std::invalid_argument("dep-sweep needs at least two trials");
    const auto &s = sf.scenario;
    // Willie directly below the UAV at H_min, full jamming budget; Pa sits on the covert boundary.
    const double pj = s.p_tot;
    const double g_uw = s.budget.beta0_chi / (s.h_min * s.h_min);
    const double ell = s.sat.ell;

    std::vector<DepSweepRow> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        const auto sr = rows[r] == "custom" ? s.sr : shadowing_row(rows[r]);
        const auto g = channel::gamma_from_sr(sr);
        for (std::size_t e = 0; e < eps_grid.size(); ++e)
        {
            const double eps = eps_grid[e];
            if (!(eps > 0.0 && eps < 1.0))
                throw std::invalid_argument("dep-sweep: eps must lie in (0, 1)");
            const double pa = analysis::phi_inverse(eps, g) * pj * g_uw / (g.theta * ell);

            DepSweepRow row;
            row.eps = eps;
            row.shadowing = rows[r];
            row.bound = analysis::avg_min_dep_lower_bound(pa, ell, pj, g_uw, g).value_lb;
            row.quadrature = analysis::avg_min_dep_quadrature(pa, ell, pj, g_uw, sr);

            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(e)};
            std::mt19937_64 rng(seq);
            double sum = 0.0, sum2 = 0.0;
            for (int i = 0; i < trials; ++i)
            {
                const double h = channel::sample_sr_power(sr, rng);
                const double xi = analysis::min_dep({pa, ell * h, pj, g_uw, s.sigma_w2}).xi;
                sum += xi;
                sum2 += xi * xi;
            }
            const double n = trials;
            row.mc_mean = sum / n;
            row.mc_stderr = std::sqrt(std::max(0.0, (sum2 - n * row.mc_mean * row.mc_mean) / (n - 1.0)) / n);
            out.push_back(row);
        }
    }
    return out;
}

planner::Solution cmd_optimize(const ScenarioFile &sf) { return planner::optimize(sf.scenario); }

planner::ValidationReport cmd_validate(const ScenarioFile &sf, const planner::Solution &sol, int trials,
                                       std::uint64_t seed)
{
    if (sol.status == planner::SolveStatus::infeasible)
        throw std::invalid_argument("cannot validate an infeasible solution");
    if (sol.powers.pk.size() != sf.scenario.ues.size())
        throw std::invalid_argument("solution has " + std::to_string(sol.powers.pk.size()) +
                                    " UE powers but the scenario has " + std::to_string(sf.scenario.ues.size()) +
                                    " UEs");
    return planner::validate_solution(sf.scenario, sol, trials, seed);
}

namespace
{

double *sweep_field(planner::Scenario &s, const std::string &param)
{
    if (param == "eps")
        return &s.eps;
    if (param == "varpi")
        return &s.varpi;
    if (param == "p_tot")
        return &s.p_tot;
    if (param == "r_tg")
        return &s.r_tg;
    if (param == "pa_max")
        return &s.pa_max;
    if (param == "h_max")
        return &s.h_max;
    return nullptr;
}

} // namespace

const std::vector<std::string> &sweep_parameters()
{
    static const std::vector<std::string> names{"eps", "varpi", "p_tot", "r_tg", "pa_max", "h_max"};
    return names;
}

std::vector<SweepRow> cmd_sweep(const ScenarioFile &sf, const std::string &param, const std::vector<double> &grid)
{
    planner::Scenario probe = sf.scenario;
    if (!sweep_field(probe, param))
        throw std::invalid_argument("unknown sweep parameter '" + param + "'");

    std::vector<SweepRow> rows;
    for (double v : grid)
    {
        planner::Scenario s = sf.scenario;
        *sweep_field(s, param) = v;
        SweepRow row;
        row.param = param;
        row.value = v;
        row.rb = row.pa = row.pj = row.hu = nan();
        try
        {
            const auto sol = planner::optimize(s);
            row.status = sol.status;
            row.reason = sol.reason;
            row.iters = static_cast<int>(sol.iterations.size());
            if (sol.status != planner::SolveStatus::infeasible)
            {
                row.rb = sol.rb;
                row.pa = sol.powers.pa;
                row.pj = sol.powers.pj_hat;
                row.hu = sol.placement.h;
            }
        }
        catch (const std::exception &e)
        {
            row.reason = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::string> dep_sweep_header() { return {"eps", "shadowing", "bound", "quadrature", "mc_mean", "mc_stderr"}; }

std::vector<std::string> sweep_header() { return {"param", "value", "rb", "pa", "pj", "hu", "iters"}; }

namespace
{

std::ofstream open_csv(const std::filesystem::path &path, const std::vector<std::string> &header)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << std::setprecision(17);
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    return os;
}

} // namespace

void write_dep_sweep_csv(const std::filesystem::path &path, const std::vector<DepSweepRow> &rows)
{
    auto os = open_csv(path, dep_sweep_header());
    for (const auto &r : rows)
        os << r.eps << ',' << r.shadowing << ',' << r.bound << ',' << r.quadrature << ',' << r.mc_mean << ','
           << r.mc_stderr << '\n';
}

void write_sweep_csv(const std::filesystem::path &path, const std::vector<SweepRow> &rows)
{
    auto os = open_csv(path, sweep_header());
    for (const auto &r : rows)
        os << r.param << ',' << r.value << ',' << r.rb << ',' << r.pa << ',' << r.pj << ',' << r.hu << ',' << r.iters
           << '\n';
}

void write_json(const std::filesystem::path &path, const json &doc)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << doc.dump(2) << '\n';
}

json read_json(const std::filesystem::path &path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot read " + path.string());
    try
    {
        return json::parse(is);
    }
    catch (const json::parse_error &e)
    {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

} // namespace uavcovert::experiment
