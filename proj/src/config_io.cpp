#include "fdcell/config_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fdcell {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const char* section,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::runtime_error(std::string("config: unknown key \"") + key + "\" in " + section);
    }
  }
}

template <typename T>
void read_into(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void parse_scenario(const json& obj, ScenarioConfig& cfg) {
  reject_unknown_keys(obj, "scenario",
                      {"area_width", "area_height", "num_cues", "num_d2d_links",
                       "max_d2d_length", "bandwidth_hz", "nf_dl_db", "nf_ul_db", "nf_d2d_db",
                       "thermal_noise_dbm_hz", "p_fbs_max_dbm", "p_cue_max_dbm",
                       "p_d2d_max_dbm", "sic_db", "seed"});
  read_into(obj, "area_width", cfg.area_width);
  read_into(obj, "area_height", cfg.area_height);
  read_into(obj, "num_cues", cfg.num_cues);
  read_into(obj, "num_d2d_links", cfg.num_d2d_links);
  read_into(obj, "max_d2d_length", cfg.max_d2d_length);
  read_into(obj, "bandwidth_hz", cfg.bandwidth_hz);
  read_into(obj, "nf_dl_db", cfg.nf_dl_db);
  read_into(obj, "nf_ul_db", cfg.nf_ul_db);
  read_into(obj, "nf_d2d_db", cfg.nf_d2d_db);
  read_into(obj, "thermal_noise_dbm_hz", cfg.thermal_noise_dbm_hz);
  read_into(obj, "p_fbs_max_dbm", cfg.p_fbs_max_dbm);
  read_into(obj, "p_cue_max_dbm", cfg.p_cue_max_dbm);
  read_into(obj, "p_d2d_max_dbm", cfg.p_d2d_max_dbm);
  read_into(obj, "sic_db", cfg.sic_db);
  read_into(obj, "seed", cfg.seed);
}

void parse_utility(const json& obj, UtilityConfig& cfg) {
  reject_unknown_keys(obj, "utility",
                      {"beta", "gamma", "w_dl", "w_ul", "w_d2d", "epsilon_rate"});
  read_into(obj, "beta", cfg.beta);
  read_into(obj, "gamma", cfg.gamma);
  read_into(obj, "w_dl", cfg.w_dl);
  read_into(obj, "w_ul", cfg.w_ul);
  read_into(obj, "w_d2d", cfg.w_d2d);
  read_into(obj, "epsilon_rate", cfg.epsilon_rate);
}

void parse_optimizer(const json& obj, OptimizerConfig& cfg) {
  reject_unknown_keys(obj, "optimizer",
                      {"initial_mesh", "mesh_contraction", "mesh_expansion", "mesh_tolerance",
                       "max_evaluations", "seed_full_power", "seed_center",
                       "coarse_grid_levels", "coarse_grid_log"});
  read_into(obj, "initial_mesh", cfg.initial_mesh);
  read_into(obj, "mesh_contraction", cfg.mesh_contraction);
  read_into(obj, "mesh_expansion", cfg.mesh_expansion);
  read_into(obj, "mesh_tolerance", cfg.mesh_tolerance);
  read_into(obj, "max_evaluations", cfg.max_evaluations);
  read_into(obj, "seed_full_power", cfg.seed_full_power);
  read_into(obj, "seed_center", cfg.seed_center);
  read_into(obj, "coarse_grid_levels", cfg.coarse_grid_levels);
  read_into(obj, "coarse_grid_log", cfg.coarse_grid_log);
}

CqiTable parse_cqi(const json& arr) {
  if (!arr.is_array()) throw std::runtime_error("config: cqi_table must be an array of rows");
  std::vector<CqiRow> rows;
  for (const json& row : arr) {
    if (!row.is_array() || row.size() != 2) {
      throw std::runtime_error("config: each cqi_table row must be [threshold_db, efficiency]");
    }
    rows.push_back(CqiRow{row[0].get<double>(), row[1].get<double>()});
  }
  return CqiTable(std::move(rows));
}

void parse_floors(const json& obj, ExperimentConfig& cfg) {
  reject_unknown_keys(obj, "min_sinr_db", {"dl", "ul", "d2d"});
  read_into(obj, "dl", cfg.min_sinr_dl_db);
  read_into(obj, "ul", cfg.min_sinr_ul_db);
  read_into(obj, "d2d", cfg.min_sinr_d2d_db);
}

void parse_experiment(const json& obj, ExperimentConfig& cfg, SchedulerMode& mode) {
  reject_unknown_keys(obj, "experiment",
                      {"num_scenarios", "num_ttis", "tti_duration_s", "threads", "mode"});
  read_into(obj, "num_scenarios", cfg.num_scenarios);
  read_into(obj, "num_ttis", cfg.num_ttis);
  read_into(obj, "tti_duration_s", cfg.tti_duration_s);
  read_into(obj, "threads", cfg.threads);
  if (obj.contains("mode")) mode = scheduler_mode_from_string(obj.at("mode").get<std::string>());
}



json config_to_json(const ExperimentConfig& cfg, SchedulerMode mode) {
  json j;
  j["scenario"] = {{"area_width", cfg.scenario.area_width},
                   {"area_height", cfg.scenario.area_height},
                   {"num_cues", cfg.scenario.num_cues},
                   {"num_d2d_links", cfg.scenario.num_d2d_links},
                   {"max_d2d_length", cfg.scenario.max_d2d_length},
                   {"bandwidth_hz", cfg.scenario.bandwidth_hz},
                   {"nf_dl_db", cfg.scenario.nf_dl_db},
                   {"nf_ul_db", cfg.scenario.nf_ul_db},
                   {"nf_d2d_db", cfg.scenario.nf_d2d_db},
                   {"thermal_noise_dbm_hz", cfg.scenario.thermal_noise_dbm_hz},
                   {"p_fbs_max_dbm", cfg.scenario.p_fbs_max_dbm},
                   {"p_cue_max_dbm", cfg.scenario.p_cue_max_dbm},
                   {"p_d2d_max_dbm", cfg.scenario.p_d2d_max_dbm},
                   {"sic_db", cfg.scenario.sic_db},
                   {"seed", cfg.scenario.seed}};
  j["utility"] = {{"beta", cfg.utility.beta},
                  {"gamma", cfg.utility.gamma},
                  {"w_dl", cfg.utility.w_dl},
                  {"w_ul", cfg.utility.w_ul},
                  {"w_d2d", cfg.utility.w_d2d},
                  {"epsilon_rate", cfg.utility.epsilon_rate}};
  j["optimizer"] = {{"initial_mesh", cfg.optimizer.initial_mesh},
                    {"mesh_contraction", cfg.optimizer.mesh_contraction},
                    {"mesh_expansion", cfg.optimizer.mesh_expansion},
                    {"mesh_tolerance", cfg.optimizer.mesh_tolerance},
                    {"max_evaluations", cfg.optimizer.max_evaluations},
                    {"seed_full_power", cfg.optimizer.seed_full_power},
                    {"seed_center", cfg.optimizer.seed_center},
                    {"coarse_grid_levels", cfg.optimizer.coarse_grid_levels},
                    {"coarse_grid_log", cfg.optimizer.coarse_grid_log}};
  json cqi = json::array();
  for (const CqiRow& row : cfg.cqi.rows()) {
    cqi.push_back(json::array({row.threshold_db, row.efficiency}));
  }
  j["cqi_table"] = cqi;
  j["min_sinr_db"] = {{"dl", cfg.min_sinr_dl_db},
                      {"ul", cfg.min_sinr_ul_db},
                      {"d2d", cfg.min_sinr_d2d_db}};
  j["experiment"] = {{"num_scenarios", cfg.num_scenarios},
                     {"num_ttis", cfg.num_ttis},
                     {"tti_duration_s", cfg.tti_duration_s},
                     {"threads", cfg.threads},
                     {"mode", to_string(mode)}};
  return j;
}

}  // namespace

LoadedConfig parse_config_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw std::runtime_error("config: top level must be an object");
  reject_unknown_keys(root, "top level",
                      {"scenario", "utility", "optimizer", "cqi_table", "min_sinr_db",
                       "experiment"});

  LoadedConfig loaded;
  try {
    if (root.contains("scenario")) parse_scenario(root.at("scenario"), loaded.experiment.scenario);
    if (root.contains("utility")) parse_utility(root.at("utility"), loaded.experiment.utility);
    if (root.contains("optimizer")) parse_optimizer(root.at("optimizer"), loaded.experiment.optimizer);
    if (root.contains("cqi_table")) loaded.experiment.cqi = parse_cqi(root.at("cqi_table"));
    if (root.contains("min_sinr_db")) {
      parse_floors(root.at("min_sinr_db"), loaded.experiment);
    }
    if (root.contains("experiment")) {
      parse_experiment(root.at("experiment"), loaded.experiment, loaded.mode);
    }
    loaded.experiment.validate();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  return loaded;
}

LoadedConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config_json(text);
}

std::string experiment_config_to_json(const ExperimentConfig& cfg, SchedulerMode mode) {
  return config_to_json(cfg, mode).dump(2);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(12);
  return out;
}

}  // namespace

void write_cdf_csv(const std::filesystem::path& path, std::span<const CdfPoint> cdf) {
  auto out = open_out(path);
  out << "throughput_bps,cdf\n";
  for (const CdfPoint& p : cdf) out << p.throughput_bps << "," << p.fraction << "\n";
}

void write_combos_csv(const std::filesystem::path& path, const CombinationShares& shares) {
  auto out = open_out(path);
  out << "class,percent\n";
  for (int i = 0; i < kNumCombinationClasses; ++i) {
    out << to_string(static_cast<CombinationClass>(i)) << "," << shares.pct[i] << "\n";
  }
  out << "simultaneous," << shares.simultaneous_pct << "\n";
  out << "d2d_any," << shares.d2d_pct << "\n";
}

void write_sic_sweep_csv(const std::filesystem::path& path, std::span<const SicSweepRow> rows,
                         std::span<const SchedulerMode> modes) {
  auto out = open_out(path);
  out << "sic_db";
  for (SchedulerMode m : modes) out << "," << to_string(m) << "_bps";
  out << "\n";
  for (const SicSweepRow& row : rows) {
    out << row.sic_db;
    for (double v : row.mean_aggregate_bps) out << "," << v;
    out << "\n";
  }
}

void write_weight_sweep_csv(const std::filesystem::path& path,
                            std::span<const WeightSweepEntry> entries) {
  auto out = open_out(path);
  out << "w_d2d,link_class,throughput_bps,cdf\n";
  for (const WeightSweepEntry& entry : entries) {
    for (int c = 0; c < 3; ++c) {
      const auto cdf = make_cdf(entry.samples[c]);
      for (const CdfPoint& p : cdf) {
        out << entry.w_d2d << "," << to_string(static_cast<LinkClass>(c)) << ","
            << p.throughput_bps << "," << p.fraction << "\n";
      }
    }
  }
}

void write_manifest_json(const std::filesystem::path& path, const ExperimentConfig& cfg,
                         std::span<const MetricsReport> reports) {
  json j;
  j["config"] = json::parse(experiment_config_to_json(
      cfg, reports.empty() ? SchedulerMode::Dpa : reports.front().mode));
  json seeds = json::array();
  for (int i = 0; i < cfg.num_scenarios; ++i) {
    seeds.push_back(cfg.scenario.seed + static_cast<std::uint64_t>(i));
  }
  j["scenario_seeds"] = seeds;

  json runs = json::array();
  for (const MetricsReport& r : reports) {
    json run;
    run["mode"] = to_string(r.mode);
    run["base_seed"] = r.base_seed;
    run["sic_db"] = r.sic_db;
    run["w_d2d"] = r.w_d2d;
    run["num_scenarios"] = r.num_scenarios;
    run["num_ttis"] = r.num_ttis;
    run["aggregate_throughput_bps"] = r.aggregate_throughput_bps;
    if (r.energy_efficiency_bpj) {
      run["energy_efficiency_bpj"] = *r.energy_efficiency_bpj;
    } else {
      run["energy_efficiency_bpj"] = nullptr;
    }
    json combos;
    for (int i = 0; i < kNumCombinationClasses; ++i) {
      combos[to_string(static_cast<CombinationClass>(i))] = r.combos.pct[i];
    }
    combos["simultaneous"] = r.combos.simultaneous_pct;
    combos["d2d_any"] = r.combos.d2d_pct;
    run["combination_pct"] = combos;
    json classes;
    for (int c = 0; c < 3; ++c) {
      const auto& samples = r.throughput_samples[c];
      double mean = 0.0;
      for (double s : samples) mean += s;
      if (!samples.empty()) mean /= static_cast<double>(samples.size());
      classes[to_string(static_cast<LinkClass>(c))] = {{"mean_bps", mean},
                                                       {"num_samples", samples.size()}};
    }
    run["throughput"] = classes;
    runs.push_back(run);
  }
  j["runs"] = runs;

  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

}  // namespace fdcell
