#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdcell/metrics.hpp"
#include "fdcell/optimizer.hpp"
#include "fdcell/scheduler.hpp"

namespace fdcell {

// One experiment = a batch of independent scenario drops simulated with
// identical knobs. Scenario i uses seed base_seed + i, so cross-mode and
// cross-parameter comparisons are paired by construction.
struct ExperimentConfig {
  ScenarioConfig scenario;
  UtilityConfig utility;
  OptimizerConfig optimizer;
  CqiTable cqi;
  // Minimum required SINR per link type for the power-controlled modes
  // (FPA applies no floors). The default is the CQI class-10 switching
  // point, the SINR requirement the transmit-power budget is set for.
  double min_sinr_dl_db = 10.37;
  double min_sinr_ul_db = 10.37;
  double min_sinr_d2d_db = 10.37;
  int num_scenarios = 20;
  int num_ttis = 2000;
  double tti_duration_s = 1e-3;
  int threads = 0;  // 0 = hardware concurrency

  SinrFloors floors() const;
  void validate() const;
};

// Runs the batch with scenario-level parallel fan-out; the returned traces
// are ordered by scenario index regardless of thread scheduling.
std::vector<SimulationTrace> run_batch(const ExperimentConfig& cfg, SchedulerMode mode);

struct SicSweepRow {
  double sic_db;
  // Mean aggregate throughput per requested mode, same order as the
  // `modes` argument.
  std::vector<double> mean_aggregate_bps;
};

// Paired sweep: every (sic, mode) cell reuses the same scenario seeds.
std::vector<SicSweepRow> sic_sweep(const ExperimentConfig& base, const std::vector<double>& sic_values_db,
                                   const std::vector<SchedulerMode>& modes);

struct WeightSweepEntry {
  double w_d2d;
  // Pooled per-link average throughput samples, indexed by LinkClass.
  std::array<std::vector<double>, 3> samples;
};

// DPA runs with w_dl = w_ul = 1 and the D2D weightage swept.
std::vector<WeightSweepEntry> weight_sweep(const ExperimentConfig& base,
                                           const std::vector<double>& w_values);

// Plot-ready digest of one batch.
struct MetricsReport {
  std::array<std::vector<double>, 3> throughput_samples;  // by LinkClass
  CombinationShares combos;
  double aggregate_throughput_bps = 0.0;
  std::optional<double> energy_efficiency_bpj;
  // Run metadata.
  SchedulerMode mode = SchedulerMode::Fpa;
  std::uint64_t base_seed = 0;
  double sic_db = 0.0;
  double w_d2d = 1.0;
  int num_scenarios = 0;
  int num_ttis = 0;
};

MetricsReport build_report(const ExperimentConfig& cfg, SchedulerMode mode,
                           std::span<const SimulationTrace> traces);

}  // namespace fdcell
