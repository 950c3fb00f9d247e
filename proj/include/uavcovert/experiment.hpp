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

#ifndef UAVCOVERT_EXPERIMENT_HPP
#define UAVCOVERT_EXPERIMENT_HPP

#include "uavcovert/planner.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uavcovert::experiment
{

using nlohmann::json;

/// Physical dimension of a unit-tagged quantity.
enum class Dimension
{
    power,
    gain,
    frequency,
    length,
    angle,
    rate,
    ratio,
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double w);
double db_to_linear(double db);
double linear_to_db(double lin);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Converts {"value": x, "unit": u} to SI (W, linear gain, Hz, m, rad, bit/s/Hz, plain ratio).
/// Throws std::invalid_argument when the tag is missing or does not fit the dimension.
double to_si(const json &quantity, Dimension dim);

/// Canonical SI tag for a dimension ("W", "linear", "Hz", "m", "rad", "bps/Hz", "1").
std::string si_unit(Dimension dim);

struct UePlacementSpec
{
    bool uniform = true;
    double side = 600.0; // m, square centred on the origin
    int count = 5;
    std::vector<channel::GroundPos> positions; // explicit list when !uniform
};

struct ScenarioFile
{
    planner::Scenario scenario;
    std::string shadowing = "light"; // row name, or "custom"
    UePlacementSpec ue_placement;
    std::uint64_t rng_seed = 1;
};

/// Draws the UE positions (uniform_square) or copies the explicit list.
std::vector<channel::GroundPos> place_ues(const UePlacementSpec &spec, std::uint64_t seed);

/// Parses and validates a scenario document; unknown keys are rejected.
ScenarioFile parse_scenario(const json &doc);
ScenarioFile load_scenario(const std::filesystem::path &path);

/// Re-seeds the scenario and redraws uniform UE positions.
void reseed(ScenarioFile &sf, std::uint64_t seed);

/// SI-tagged document that parses back to the same scenario.
json to_json(const ScenarioFile &sf);

/// FNV-1a 64 over the canonical (key-sorted) SI document, as 16 hex digits.
std::string scenario_hash(const ScenarioFile &sf);

json to_json(const planner::Solution &sol);
planner::Solution solution_from_json(const json &doc);
json to_json(const planner::ValidationReport &rep);

/// Append-only record of one command run.
struct ResultRecord
{
    std::string run_id;
    std::string scenario_hash;
    std::string command;
    std::uint64_t seed = 0;
    json outputs;
    double wall_time = 0.0; // s

    json to_json() const;
};

ResultRecord make_record(const ScenarioFile &sf, std::string command, json outputs, double wall_time);
void append_record(const std::filesystem::path &out_dir, const ResultRecord &rec);

struct DepSweepRow
{
    double eps = 0.0;
    std::string shadowing;
    double bound = 0.0;
    double quadrature = 0.0;
    double mc_mean = 0.0;
    double mc_stderr = 0.0;
};

/// Average minimum DEP at the covert-boundary operating point for every (eps, shadowing row).
std::vector<DepSweepRow> cmd_dep_sweep(const ScenarioFile &sf, const std::vector<double> &eps_grid,
                                       const std::vector<std::string> &rows, int trials, std::uint64_t seed);

planner::Solution cmd_optimize(const ScenarioFile &sf);

planner::ValidationReport cmd_validate(const ScenarioFile &sf, const planner::Solution &sol, int trials,
                                       std::uint64_t seed);

struct SweepRow
{
    std::string param;
    double value = 0.0;
    double rb = 0.0;
    double pa = 0.0;
    double pj = 0.0;
    double hu = 0.0;
    int iters = 0;
    planner::SolveStatus status = planner::SolveStatus::infeasible;
    std::string reason;
};

/// Scalar fields accepted by cmd_sweep.
const std::vector<std::string> &sweep_parameters();

/// One cmd_optimize per grid value; failed points are kept with NaN outputs.
std::vector<SweepRow> cmd_sweep(const ScenarioFile &sf, const std::string &param, const std::vector<double> &grid);

std::vector<std::string> dep_sweep_header();
std::vector<std::string> sweep_header();
void write_dep_sweep_csv(const std::filesystem::path &path, const std::vector<DepSweepRow> &rows);
void write_sweep_csv(const std::filesystem::path &path, const std::vector<SweepRow> &rows);

/// Writes a JSON document, creating parent directories.
void write_json(const std::filesystem::path &path, const json &doc);
json read_json(const std::filesystem::path &path);

} // namespace uavcovert::experiment

#endif
