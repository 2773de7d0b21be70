// Command-line driver for the full-duplex small-cell D2D simulator:
// single-mode Monte-Carlo runs plus the SIC and D2D-weightage sweeps.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdcell/config_io.hpp"

namespace fs = std::filesystem;
using namespace fdcell;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  int scenarios = -1;
  int ttis = -1;
  double sic_db = std::numeric_limits<double>::quiet_NaN();
  double w_d2d = std::numeric_limits<double>::quiet_NaN();
  std::int64_t seed = -1;
  int threads = -1;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file");
  cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--scenarios", args.scenarios, "number of scenario drops");
  cmd->add_option("--ttis", args.ttis, "TTIs per scenario");
  cmd->add_option("--sic-db", args.sic_db, "self-interference cancellation in dB");
  cmd->add_option("--w-d2d", args.w_d2d, "D2D throughput weightage in (0,1]");
  cmd->add_option("--seed", args.seed, "base scenario seed");
  cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
}

LoadedConfig resolve_config(const CommonArgs& args) {
  LoadedConfig loaded;
  if (!args.config_path.empty()) loaded = load_config_file(args.config_path);
  if (args.scenarios >= 0) loaded.experiment.num_scenarios = args.scenarios;
  if (args.ttis >= 0) loaded.experiment.num_ttis = args.ttis;
  if (!std::isnan(args.sic_db)) loaded.experiment.scenario.sic_db = args.sic_db;
  if (!std::isnan(args.w_d2d)) loaded.experiment.utility.w_d2d = args.w_d2d;
  if (args.seed >= 0) loaded.experiment.scenario.seed = static_cast<std::uint64_t>(args.seed);
  if (args.threads >= 0) loaded.experiment.threads = args.threads;
  loaded.experiment.validate();
  return loaded;
}

fs::path prepare_out_dir(const CommonArgs& args) {
  fs::path dir(args.out_dir);
  fs::create_directories(dir);
  return dir;
}

int run_simulate(const CommonArgs& args, const std::string& mode_name) {
  LoadedConfig loaded = resolve_config(args);
  if (!mode_name.empty()) loaded.mode = scheduler_mode_from_string(mode_name);
  const fs::path dir = prepare_out_dir(args);

  const auto traces = run_batch(loaded.experiment, loaded.mode);
  const MetricsReport report = build_report(loaded.experiment, loaded.mode, traces);

  write_cdf_csv(dir / "cdf_dl.csv", throughput_cdf(traces, LinkClass::Dl));
  write_cdf_csv(dir / "cdf_ul.csv", throughput_cdf(traces, LinkClass::Ul));
  write_cdf_csv(dir / "cdf_d2d.csv", throughput_cdf(traces, LinkClass::D2d));
  write_combos_csv(dir / "combos.csv", report.combos);
  write_manifest_json(dir / "manifest.json", loaded.experiment, {&report, 1});

  std::cout << "mode " << to_string(loaded.mode) << ": aggregate "
            << report.aggregate_throughput_bps / 1e6 << " Mbit/s, simultaneous "
            << report.combos.simultaneous_pct << "%, outputs in " << dir.string() << "\n";
  return 0;
}

int run_sweep_sic(const CommonArgs& args, const std::vector<double>& sic_values,
                  const std::vector<std::string>& mode_names) {
  LoadedConfig loaded = resolve_config(args);
  const fs::path dir = prepare_out_dir(args);

  std::vector<SchedulerMode> modes;
  for (const std::string& m : mode_names) modes.push_back(scheduler_mode_from_string(m));

  const auto rows = sic_sweep(loaded.experiment, sic_values, modes);
  write_sic_sweep_csv(dir / "sic_sweep.csv", rows, modes);
  write_manifest_json(dir / "manifest.json", loaded.experiment, {});

  std::cout << "sic sweep over " << sic_values.size() << " values x " << modes.size()
            << " modes written to " << (dir / "sic_sweep.csv").string() << "\n";
  return 0;
}

int run_sweep_weight(const CommonArgs& args, const std::vector<double>& w_values) {
  LoadedConfig loaded = resolve_config(args);
  const fs::path dir = prepare_out_dir(args);

  const auto entries = weight_sweep(loaded.experiment, w_values);
  write_weight_sweep_csv(dir / "weight_sweep.csv", entries);
  write_manifest_json(dir / "manifest.json", loaded.experiment, {});

  std::cout << "weight sweep over " << w_values.size() << " values written to "
            << (dir / "weight_sweep.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full-duplex small-cell with D2D: joint user-selection and power-control simulator"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  std::string mode_name;
  CLI::App* simulate = app.add_subcommand("simulate", "run one scheduler mode and emit CDF/combination CSVs");
  add_common_options(simulate, sim_args);
  simulate->add_option("--mode", mode_name, "fpa | dpa | hd");

  CommonArgs sic_args;
  std::vector<double> sic_values{65.0, 75.0, 85.0, 95.0, 105.0};
  std::vector<std::string> sweep_modes{"fpa", "dpa", "hd"};
  CLI::App* sweep_sic = app.add_subcommand("sweep-sic", "aggregate throughput vs SIC, paired seeds");
  add_common_options(sweep_sic, sic_args);
  sweep_sic->add_option("--sic-values", sic_values, "SIC values in dB")
      ->delimiter(',')
      ->capture_default_str();
  sweep_sic->add_option("--modes", sweep_modes, "modes to sweep")->delimiter(',')->capture_default_str();

  CommonArgs weight_args;
  std::vector<double> w_values{0.2, 0.4, 0.6, 0.8, 1.0};
  CLI::App* sweep_weight = app.add_subcommand("sweep-weight", "per-class CDFs for a D2D weightage sweep (DPA)");
  add_common_options(sweep_weight, weight_args);
  sweep_weight->add_option("--w-values", w_values, "D2D weightages in (0,1]")
      ->delimiter(',')
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim_args, mode_name);
    if (sweep_sic->parsed()) return run_sweep_sic(sic_args, sic_values, sweep_modes);
    if (sweep_weight->parsed()) return run_sweep_weight(weight_args, w_values);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
