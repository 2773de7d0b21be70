#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "fdcell/experiment.hpp"

namespace fdcell {

// JSON config file. Every section and key is optional and falls back to
// the built-in default; unknown keys are rejected so typos fail loudly.
//
//   {
//     "scenario":   { "area_width": 60.0, ..., "sic_db": 65.0, "seed": 1 },
//     "utility":    { "beta": 0.9, "gamma": 0.1, "w_dl": 1.0, ... },
//     "optimizer":  { "initial_mesh": 0.25, ... },
//     "cqi_table":  [[-6.934, 0.1523], ...],
//     "min_sinr_db": { "dl": -6.934, "ul": -6.934, "d2d": -6.934 },
//     "experiment": { "num_scenarios": 20, "num_ttis": 2000,
//                     "tti_duration_s": 0.001, "threads": 0, "mode": "dpa" }
//   }
//
// "mode" is carried separately because sweeps ignore it.
struct LoadedConfig {
  ExperimentConfig experiment;
  SchedulerMode mode = SchedulerMode::Dpa;
};

// Throws std::runtime_error with a message naming the offending key on any
// parse or validation problem.
LoadedConfig load_config_file(const std::filesystem::path& path);
LoadedConfig parse_config_json(const std::string& text);

std::string experiment_config_to_json(const ExperimentConfig& cfg, SchedulerMode mode);

void write_cdf_csv(const std::filesystem::path& path, std::span<const CdfPoint> cdf);
void write_combos_csv(const std::filesystem::path& path, const CombinationShares& shares);
void write_sic_sweep_csv(const std::filesystem::path& path, std::span<const SicSweepRow> rows,
                         std::span<const SchedulerMode> modes);
void write_weight_sweep_csv(const std::filesystem::path& path,
                            std::span<const WeightSweepEntry> entries);
void write_manifest_json(const std::filesystem::path& path, const ExperimentConfig& cfg,
                         std::span<const MetricsReport> reports);

}  // namespace fdcell
