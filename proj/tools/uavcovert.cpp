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

// uavcovert command line: dep-sweep, optimize, validate, sweep.

#include "uavcovert/experiment.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

namespace
{

namespace ex = uavcovert::experiment;
namespace pl = uavcovert::planner;

enum Exit
{
    kOk = 0,
    kOther = 1,
    kInfeasible = 2,
    kValidationFail = 3,
};

struct Options
{
    std::string scenario = "scenarios/default.json";
    std::optional<std::uint64_t> seed;
    int trials = 10000;
    std::string out = "out";
    std::string solution;
    std::string param;
    std::vector<double> grid;
    std::vector<double> eps{0.005, 0.01, 0.02, 0.05, 0.1};
    std::vector<std::string> shadowing{"light", "average", "heavy"};
};

ex::ScenarioFile load(const Options &o)
{
    auto sf = ex::load_scenario(o.scenario);
    if (o.seed)
        ex::reseed(sf, *o.seed);
    return sf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_dep_sweep(const Options &o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = load(o);
    const auto rows = ex::cmd_dep_sweep(sf, o.eps, o.shadowing, o.trials, sf.rng_seed);
    const auto csv = std::filesystem::path(o.out) / "dep_sweep.csv";
    ex::write_dep_sweep_csv(csv, rows);

    ex::json table = ex::json::array();
    for (const auto &r : rows)
        table.push_back({{"eps", r.eps},
                         {"shadowing", r.shadowing},
                         {"bound", r.bound},
                         {"quadrature", r.quadrature},
                         {"mc_mean", r.mc_mean},
                         {"mc_stderr", r.mc_stderr}});
    ex::append_record(o.out, ex::make_record(sf, "dep-sweep", {{"trials", o.trials}, {"rows", table}},
                                             seconds_since(t0)));
    std::cout << "wrote " << csv.string() << " (" << rows.size() << " rows)\n";
    return kOk;
}

int run_optimize(const Options &o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = load(o);
    const auto sol = ex::cmd_optimize(sf);

    ex::json ues = ex::json::array();
    for (const auto &u : sf.scenario.ues)
        ues.push_back({u.x, u.y});
    ex::json doc = ex::to_json(sol);
    doc["scenario_hash"] = ex::scenario_hash(sf);
    doc["ues"] = ues;
    const auto path = std::filesystem::path(o.out) / "solution.json";
    ex::write_json(path, doc);
    ex::append_record(o.out, ex::make_record(sf, "optimize", {{"solution", ex::to_json(sol)}, {"ues", ues}},
                                             seconds_since(t0)));

    if (sol.status == pl::SolveStatus::infeasible)
    {
        std::cerr << "infeasible: " << sol.reason << '\n';
        return kInfeasible;
    }
    std::cout << sol.algorithm << ' ' << pl::to_string(sol.status) << " Rb=" << sol.rb << " Pa=" << sol.powers.pa
              << " Pj=" << sol.powers.pj_hat << " q=(" << sol.placement.q.x << ", " << sol.placement.q.y
              << ") H=" << sol.placement.h << "\nwrote " << path.string() << '\n';
    return kOk;
}

int run_validate(const Options &o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = load(o);
    if (o.solution.empty())
        throw std::invalid_argument("validate needs --solution");
    const auto sol = ex::solution_from_json(ex::read_json(o.solution));
    const auto rep = ex::cmd_validate(sf, sol, o.trials, sf.rng_seed);
    const auto path = std::filesystem::path(o.out) / "validation.json";
    ex::write_json(path, ex::to_json(rep));
    ex::append_record(o.out, ex::make_record(sf, "validate", ex::to_json(rep), seconds_since(t0)));
    std::cout << "xi_mc=" << rep.xi_mc << " (se " << rep.xi_stderr << ") threshold=" << rep.threshold
              << (rep.pass ? " PASS" : " FAIL") << "\nwrote " << path.string() << '\n';
    return rep.pass ? kOk : kValidationFail;
}

int run_sweep(const Options &o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = load(o);
    if (o.grid.empty())
        throw std::invalid_argument("sweep needs --grid");
    const auto rows = ex::cmd_sweep(sf, o.param, o.grid);
    const auto csv = std::filesystem::path(o.out) / "sweep.csv";
    ex::write_sweep_csv(csv, rows);

    ex::json table = ex::json::array();
    for (const auto &r : rows)
        table.push_back({{"value", r.value},
                         {"status", pl::to_string(r.status)},
                         {"reason", r.reason},
                         {"rb", r.rb},
                         {"pa", r.pa},
                         {"pj", r.pj},
                         {"hu", r.hu},
                         {"iters", r.iters}});
    ex::append_record(o.out, ex::make_record(sf, "sweep", {{"param", o.param}, {"rows", table}}, seconds_since(t0)));
    for (const auto &r : rows)
        if (r.status == pl::SolveStatus::infeasible)
            std::cerr << o.param << '=' << r.value << ": " << r.reason << '\n';
    std::cout << "wrote " << csv.string() << " (" << rows.size() << " rows)\n";
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Covert link planning for UAV-assisted satellite downlinks"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App *cmd) {
        cmd->add_option("--scenario", o.scenario, "Scenario JSON file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", o.seed, "Override rng_seed (UE placement and Monte Carlo streams)");
        cmd->add_option("--out", o.out, "Output directory");
    };

    auto *dep = app.add_subcommand("dep-sweep", "Average minimum DEP: bound, quadrature and Monte Carlo");
    common(dep);
    dep->add_option("--trials", o.trials, "Monte Carlo trials per row")->check(CLI::PositiveNumber);
    dep->add_option("--eps", o.eps, "Covertness targets")->delimiter(',');
    dep->add_option("--shadowing", o.shadowing, "Shadowing rows (light, average, heavy, custom)")->delimiter(',');

    auto *opt = app.add_subcommand("optimize", "Place the UAV and allocate powers");
    common(opt);

    auto *val = app.add_subcommand("validate", "Monte Carlo check of a solution file");
    common(val);
    val->add_option("--solution", o.solution, "Solution JSON written by optimize")
        ->required()
        ->check(CLI::ExistingFile);
    val->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);

    auto *sw = app.add_subcommand("sweep", "Optimize over a grid of one scalar parameter");
    common(sw);
    sw->add_option("--param", o.param, "Parameter to sweep")
        ->required()
        ->check(CLI::IsMember(ex::sweep_parameters()));
    sw->add_option("--grid", o.grid, "Values in SI units")->required()->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (dep->parsed())
            return run_dep_sweep(o);
        if (opt->parsed())
            return run_optimize(o);
        if (val->parsed())
            return run_validate(o);
        return run_sweep(o);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
}
