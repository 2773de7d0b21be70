#pragma once

#include <cstdint>
#include <vector>

#include "fdcell/units.hpp"

namespace fdcell {

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

double distance_m(const Position& a, const Position& b);

// One random drop: a femto base station at the center of a rectangle,
// cellular UEs scattered uniformly, and short D2D transmitter/receiver
// pairs. All powers below are stored in dBm and converted to watts once
// when the scenario is built.
struct ScenarioConfig {
  double area_width = 60.0;    // meters
  double area_height = 50.0;   // meters
  int num_cues = 10;
  int num_d2d_links = 5;
  double max_d2d_length = 4.0;  // meters
  double bandwidth_hz = 1e7;
  double nf_dl_db = 8.0;
  double nf_ul_db = 9.0;
  double nf_d2d_db = 8.0;
  double thermal_noise_dbm_hz = -174.0;
  double p_fbs_max_dbm = 1.78;
  double p_cue_max_dbm = 0.78;
  double p_d2d_max_dbm = 0.78;
  double sic_db = 65.0;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument on an out-of-range field.
  void validate() const;
};

struct D2dPair {
  Position tx;
  Position rx;
};

// Linear power gains for every ordered (source, destination) pair the SINR
// formulas reference. Flat row-major storage, accessor methods do the
// indexing.
struct GainTable {
  std::vector<double> fbs_to_cue;     // [num_cues]
  std::vector<double> cue_to_fbs;     // [num_cues]
  std::vector<double> cue_to_cue_;    // [num_cues * num_cues], src * C + dst
  std::vector<double> d2d_tx_to_rx;   // [num_d2d]
  std::vector<double> d2d_tx_to_fbs;  // [num_d2d]
  std::vector<double> d2d_tx_to_cue_; // [num_d2d * num_cues]
  std::vector<double> fbs_to_d2d_rx;  // [num_d2d]
  std::vector<double> cue_to_d2d_rx_; // [num_cues * num_d2d]

  int num_cues = 0;
  int num_d2d = 0;

  double cue_to_cue(int src, int dst) const { return cue_to_cue_[src * num_cues + dst]; }
  double d2d_tx_to_cue(int link, int cue) const { return d2d_tx_to_cue_[link * num_cues + cue]; }
  double cue_to_d2d_rx(int cue, int link) const { return cue_to_d2d_rx_[cue * num_d2d + link]; }
};

// Immutable after construction; safe to share across worker threads.
struct Scenario {
  ScenarioConfig config;
  Position fbs;
  std::vector<Position> cues;
  std::vector<D2dPair> d2d_pairs;
  GainTable gains;

  // Derived linear-domain constants.
  double noise_dl_w = 0.0;
  double noise_ul_w = 0.0;
  double noise_d2d_w = 0.0;
  double p_fbs_max_w = 0.0;
  double p_cue_max_w = 0.0;
  double p_d2d_max_w = 0.0;
  double sic_linear = 1.0;
};

// Below this separation the log-distance model is evaluated at the
// reference distance instead (it diverges as the distance goes to zero).
inline constexpr double kMinDistanceM = 1.0;

// NLOS log-distance path loss, distance in meters (model takes km).
// Throws std::domain_error for non-positive distances.
double path_loss_db(double distance_m);

// Linear power gain between two nodes with the 1 m separation floor.
double channel_gain(const Position& a, const Position& b);

// Receiver noise power in watts from thermal density, bandwidth, and
// noise figure.
double noise_power_w(double bandwidth_hz, double noise_figure_db, double density_dbm_hz);

// Deterministic: the same (config, seed) always produces a bit-identical
// scenario. CUEs are uniform over the rectangle; each D2D receiver is
// uniform over the disc of radius max_d2d_length around its transmitter,
// clipped to the rectangle.
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace fdcell
