#include "fdcell/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace fdcell {

SinrFloors ExperimentConfig::floors() const {
  return SinrFloors{db_to_linear(min_sinr_dl_db), db_to_linear(min_sinr_ul_db),
                    db_to_linear(min_sinr_d2d_db)};
}

void ExperimentConfig::validate() const {
  scenario.validate();
  utility.validate();
  optimizer.validate();
  if (num_scenarios < 1) throw std::invalid_argument("experiment: num_scenarios must be >= 1");
  if (num_ttis < 1) throw std::invalid_argument("experiment: num_ttis must be >= 1");
  if (tti_duration_s <= 0.0) throw std::invalid_argument("experiment: tti_duration_s must be > 0");
  if (threads < 0) throw std::invalid_argument("experiment: threads must be >= 0");
}

std::vector<SimulationTrace> run_batch(const ExperimentConfig& cfg, SchedulerMode mode) {
  cfg.validate();
  const SinrFloors floors = cfg.floors();
  std::vector<SimulationTrace> traces(cfg.num_scenarios);

  auto run_one = [&](int index) {
    const std::uint64_t seed = cfg.scenario.seed + static_cast<std::uint64_t>(index);
    const Scenario sc = generate_scenario(cfg.scenario, seed);
    traces[index] = run_simulation(sc, cfg.cqi, mode, cfg.num_ttis, cfg.utility, cfg.optimizer,
                                   floors, cfg.tti_duration_s);
  };

  int workers = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, cfg.num_scenarios);

  if (workers == 1) {
    for (int i = 0; i < cfg.num_scenarios; ++i) run_one(i);
    return traces;
  }

  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= cfg.num_scenarios) return;
        run_one(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return traces;
}

std::vector<SicSweepRow> sic_sweep(const ExperimentConfig& base,
                                   const std::vector<double>& sic_values_db,
                                   const std::vector<SchedulerMode>& modes) {
  if (sic_values_db.empty()) throw std::invalid_argument("sic_sweep: no SIC values");
  std::vector<SicSweepRow> rows;
  rows.reserve(sic_values_db.size());
  for (double sic : sic_values_db) {
    ExperimentConfig cfg = base;
    cfg.scenario.sic_db = sic;
    SicSweepRow row;
    row.sic_db = sic;
    for (SchedulerMode mode : modes) {
      const auto traces = run_batch(cfg, mode);
      row.mean_aggregate_bps.push_back(mean_aggregate_throughput_bps(traces));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<WeightSweepEntry> weight_sweep(const ExperimentConfig& base,
                                           const std::vector<double>& w_values) {
  for (double w : w_values) {
    if (w <= 0.0 || w > 1.0) throw std::invalid_argument("weight_sweep: values must be in (0, 1]");
  }
  std::vector<WeightSweepEntry> entries;
  entries.reserve(w_values.size());
  for (double w : w_values) {
    ExperimentConfig cfg = base;
    cfg.utility.w_dl = 1.0;
    cfg.utility.w_ul = 1.0;
    cfg.utility.w_d2d = w;
    const auto traces = run_batch(cfg, SchedulerMode::Dpa);
    WeightSweepEntry entry;
    entry.w_d2d = w;
    for (int c = 0; c < 3; ++c) {
      entry.samples[c] = pooled_link_averages(traces, static_cast<LinkClass>(c));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

MetricsReport build_report(const ExperimentConfig& cfg, SchedulerMode mode,
                           std::span<const SimulationTrace> traces) {
  MetricsReport report;
  for (int c = 0; c < 3; ++c) {
    report.throughput_samples[c] = pooled_link_averages(traces, static_cast<LinkClass>(c));
  }
  report.combos = combination_distribution(traces);
  report.aggregate_throughput_bps = mean_aggregate_throughput_bps(traces);
  report.energy_efficiency_bpj = energy_efficiency_bpj(traces);
  report.mode = mode;
  report.base_seed = cfg.scenario.seed;
  report.sic_db = cfg.scenario.sic_db;
  report.w_d2d = cfg.utility.w_d2d;
  report.num_scenarios = cfg.num_scenarios;
  report.num_ttis = cfg.num_ttis;
  return report;
}

}  // namespace fdcell
