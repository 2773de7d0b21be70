#include "fdcell/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fdcell/rng.hpp"

namespace fdcell {

double distance_m(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void ScenarioConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("scenario config: " + what);
  };
  require(area_width > 0.0, "area_width must be > 0");
  require(area_height > 0.0, "area_height must be > 0");
  require(num_cues > 0, "num_cues must be > 0");
  require(num_d2d_links > 0, "num_d2d_links must be > 0");
  require(max_d2d_length > 0.0, "max_d2d_length must be > 0");
  require(bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  require(sic_db >= 0.0, "sic_db must be >= 0");
}

double path_loss_db(double distance_m) {
  if (distance_m <= 0.0) {
    throw std::domain_error("path_loss_db: distance must be > 0 (co-located nodes)");
  }
  return 147.4 + 43.3 * std::log10(distance_m / 1000.0);
}

double channel_gain(const Position& a, const Position& b) {
  const double d = std::max(distance_m(a, b), kMinDistanceM);
  return db_to_linear(-path_loss_db(d));
}

double noise_power_w(double bandwidth_hz, double noise_figure_db, double density_dbm_hz) {
  const double noise_dbm = density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return dbm_to_watts(noise_dbm);
}

namespace {

constexpr int kMaxRxAttempts = 10000;

Position draw_in_rect(Rng& rng, double width, double height) {
  return Position{rng.uniform(0.0, width), rng.uniform(0.0, height)};
}

// Receiver is uniform over disc(tx, r) ∩ rectangle: rejection-sample from
// the clipped bounding box. If the attempt cap is hit (degenerate box),
// the caller re-draws the transmitter.
bool draw_rx_near(Rng& rng, const Position& tx, double r, double width, double height,
                  Position& rx_out) {
  const double x_lo = std::max(0.0, tx.x - r);
  const double x_hi = std::min(width, tx.x + r);
  const double y_lo = std::max(0.0, tx.y - r);
  const double y_hi = std::min(height, tx.y + r);
  for (int attempt = 0; attempt < kMaxRxAttempts; ++attempt) {
    Position rx{rng.uniform(x_lo, x_hi), rng.uniform(y_lo, y_hi)};
    if (distance_m(tx, rx) <= r) {
      rx_out = rx;
      return true;
    }
  }
  return false;
}

GainTable build_gains(const Position& fbs, const std::vector<Position>& cues,
                      const std::vector<D2dPair>& pairs) {
  GainTable g;
  g.num_cues = static_cast<int>(cues.size());
  g.num_d2d = static_cast<int>(pairs.size());
  const int c = g.num_cues;
  const int l = g.num_d2d;

  g.fbs_to_cue.resize(c);
  g.cue_to_fbs.resize(c);
  g.cue_to_cue_.resize(c * c, 0.0);
  g.d2d_tx_to_rx.resize(l);
  g.d2d_tx_to_fbs.resize(l);
  g.d2d_tx_to_cue_.resize(l * c);
  g.fbs_to_d2d_rx.resize(l);
  g.cue_to_d2d_rx_.resize(c * l);

  for (int i = 0; i < c; ++i) {
    g.fbs_to_cue[i] = channel_gain(fbs, cues[i]);
    g.cue_to_fbs[i] = channel_gain(cues[i], fbs);
    for (int j = 0; j < c; ++j) {
      if (i == j) continue;  // same UE is never both source and victim
      g.cue_to_cue_[i * c + j] = channel_gain(cues[i], cues[j]);
    }
  }
  for (int k = 0; k < l; ++k) {
    g.d2d_tx_to_rx[k] = channel_gain(pairs[k].tx, pairs[k].rx);
    g.d2d_tx_to_fbs[k] = channel_gain(pairs[k].tx, fbs);
    g.fbs_to_d2d_rx[k] = channel_gain(fbs, pairs[k].rx);
    for (int i = 0; i < c; ++i) {
      g.d2d_tx_to_cue_[k * c + i] = channel_gain(pairs[k].tx, cues[i]);
      g.cue_to_d2d_rx_[i * l + k] = channel_gain(cues[i], pairs[k].rx);
    }
  }
  return g;
}

}  // namespace

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();

  Rng rng(seed);
  Scenario sc;
  sc.config = config;
  sc.config.seed = seed;
  sc.fbs = Position{config.area_width / 2.0, config.area_height / 2.0};

  sc.cues.reserve(config.num_cues);
  for (int i = 0; i < config.num_cues; ++i) {
    sc.cues.push_back(draw_in_rect(rng, config.area_width, config.area_height));
  }

  sc.d2d_pairs.reserve(config.num_d2d_links);
  for (int k = 0; k < config.num_d2d_links; ++k) {
    D2dPair pair;
    for (;;) {
      pair.tx = draw_in_rect(rng, config.area_width, config.area_height);
      if (draw_rx_near(rng, pair.tx, config.max_d2d_length, config.area_width,
                       config.area_height, pair.rx)) {
        break;
      }
    }
    sc.d2d_pairs.push_back(pair);
  }

  sc.gains = build_gains(sc.fbs, sc.cues, sc.d2d_pairs);
  sc.noise_dl_w = noise_power_w(config.bandwidth_hz, config.nf_dl_db, config.thermal_noise_dbm_hz);
  sc.noise_ul_w = noise_power_w(config.bandwidth_hz, config.nf_ul_db, config.thermal_noise_dbm_hz);
  sc.noise_d2d_w = noise_power_w(config.bandwidth_hz, config.nf_d2d_db, config.thermal_noise_dbm_hz);
  sc.p_fbs_max_w = dbm_to_watts(config.p_fbs_max_dbm);
  sc.p_cue_max_w = dbm_to_watts(config.p_cue_max_dbm);
  sc.p_d2d_max_w = dbm_to_watts(config.p_d2d_max_dbm);
  sc.sic_linear = db_to_linear(config.sic_db);
  return sc;
}

}  // namespace fdcell
