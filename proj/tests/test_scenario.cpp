#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdcell/rng.hpp"
#include "fdcell/scenario.hpp"

using namespace fdcell;

TEST_CASE("path loss matches the log-distance model") {
  CHECK(path_loss_db(1000.0) == doctest::Approx(147.4).epsilon(1e-12));
  CHECK(path_loss_db(100.0) == doctest::Approx(147.4 - 43.3).epsilon(1e-12));
  // corner of the default rectangle seen from the center
  const double corner = std::hypot(30.0, 25.0);
  CHECK(path_loss_db(corner) == doctest::Approx(86.42).epsilon(5e-4));
  CHECK_THROWS_AS(path_loss_db(0.0), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(-3.0), std::domain_error);
}

TEST_CASE("channel gain: direct value, monotonicity, separation floor") {
  const Position a{0.0, 0.0};
  CHECK(channel_gain(a, Position{1000.0, 0.0}) ==
        doctest::Approx(std::pow(10.0, -14.74)).epsilon(1e-12));

  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double d1 = rng.uniform(1.0, 500.0);
    const double d2 = d1 + rng.uniform(0.001, 500.0);
    CHECK(channel_gain(a, Position{d1, 0.0}) > channel_gain(a, Position{d2, 0.0}));
  }

  // below the 1 m floor the gain saturates
  CHECK(channel_gain(a, Position{0.1, 0.0}) == channel_gain(a, Position{1.0, 0.0}));
}

TEST_CASE("noise power from density, bandwidth, and noise figure") {
  CHECK(noise_power_w(1e7, 8.0, -174.0) == doctest::Approx(2.512e-13).epsilon(1e-3));
  CHECK(noise_power_w(1e7, 9.0, -174.0) == doctest::Approx(dbm_to_watts(-95.0)).epsilon(1e-12));
  CHECK(noise_power_w(1.0, 0.0, -174.0) == doctest::Approx(dbm_to_watts(-174.0)).epsilon(1e-12));
}

TEST_CASE("generate_scenario is deterministic in (config, seed)") {
  ScenarioConfig cfg;
  const Scenario a = generate_scenario(cfg, 42);
  const Scenario b = generate_scenario(cfg, 42);
  REQUIRE(a.cues.size() == b.cues.size());
  for (std::size_t i = 0; i < a.cues.size(); ++i) {
    CHECK(a.cues[i].x == b.cues[i].x);
    CHECK(a.cues[i].y == b.cues[i].y);
  }
  REQUIRE(a.d2d_pairs.size() == b.d2d_pairs.size());
  for (std::size_t i = 0; i < a.d2d_pairs.size(); ++i) {
    CHECK(a.d2d_pairs[i].tx.x == b.d2d_pairs[i].tx.x);
    CHECK(a.d2d_pairs[i].rx.y == b.d2d_pairs[i].rx.y);
  }
  CHECK(a.gains.fbs_to_cue == b.gains.fbs_to_cue);

  const Scenario c = generate_scenario(cfg, 43);
  CHECK(a.cues[0].x != c.cues[0].x);
}

TEST_CASE("generated drops respect counts, containment, and pair length") {
  ScenarioConfig cfg;
  for (std::uint64_t seed = 0; seed < 1200; ++seed) {
    const Scenario sc = generate_scenario(cfg, seed);
    REQUIRE(sc.cues.size() == 10);
    REQUIRE(sc.d2d_pairs.size() == 5);
    CHECK(sc.fbs.x == doctest::Approx(30.0));
    CHECK(sc.fbs.y == doctest::Approx(25.0));
    for (const Position& p : sc.cues) {
      CHECK(p.x >= 0.0);
      CHECK(p.x <= cfg.area_width);
      CHECK(p.y >= 0.0);
      CHECK(p.y <= cfg.area_height);
    }
    for (const D2dPair& pair : sc.d2d_pairs) {
      CHECK(distance_m(pair.tx, pair.rx) <= cfg.max_d2d_length);
      CHECK(pair.rx.x >= 0.0);
      CHECK(pair.rx.x <= cfg.area_width);
      CHECK(pair.rx.y >= 0.0);
      CHECK(pair.rx.y <= cfg.area_height);
    }
  }
}

TEST_CASE("CUE placement is uniform: sample mean of x near the center") {
  ScenarioConfig cfg;
  double sum = 0.0;
  long n = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Scenario sc = generate_scenario(cfg, seed);
    for (const Position& p : sc.cues) {
      sum += p.x;
      ++n;
    }
  }
  CHECK(sum / static_cast<double>(n) == doctest::Approx(30.0).epsilon(0.5 / 30.0));
}

TEST_CASE("gains lie in (0,1) and noise powers are positive") {
  const Scenario sc = generate_scenario(ScenarioConfig{}, 7);
  auto check_gain = [](double g) {
    CHECK(g > 0.0);
    CHECK(g < 1.0);
  };
  for (double g : sc.gains.fbs_to_cue) check_gain(g);
  for (double g : sc.gains.cue_to_fbs) check_gain(g);
  for (double g : sc.gains.d2d_tx_to_rx) check_gain(g);
  for (double g : sc.gains.d2d_tx_to_fbs) check_gain(g);
  for (double g : sc.gains.fbs_to_d2d_rx) check_gain(g);
  for (int i = 0; i < sc.gains.num_cues; ++i) {
    for (int j = 0; j < sc.gains.num_cues; ++j) {
      if (i != j) check_gain(sc.gains.cue_to_cue(i, j));
    }
    for (int k = 0; k < sc.gains.num_d2d; ++k) {
      check_gain(sc.gains.cue_to_d2d_rx(i, k));
      check_gain(sc.gains.d2d_tx_to_cue(k, i));
    }
  }
  CHECK(sc.noise_dl_w > 0.0);
  CHECK(sc.noise_ul_w > 0.0);
  CHECK(sc.noise_d2d_w > 0.0);
}

TEST_CASE("link budget anchor: DL vs UL SNR gap is exactly the 2 dB budget") {
  // The default budget gives the UL 1 dB less transmit power and 1 dB more
  // noise figure, so at equal distance the interference-free DL SNR sits
  // exactly 2 dB above the UL SNR.
  const Scenario sc = generate_scenario(ScenarioConfig{}, 3);
  for (int i = 0; i < static_cast<int>(sc.cues.size()); ++i) {
    const double g = sc.gains.fbs_to_cue[i];
    const double g_up = sc.gains.cue_to_fbs[i];
    CHECK(g == g_up);  // same distance, same deterministic model
    const double dl_snr_db = linear_to_db(sc.p_fbs_max_w * g / sc.noise_dl_w);
    const double ul_snr_db = linear_to_db(sc.p_cue_max_w * g_up / sc.noise_ul_w);
    CHECK(dl_snr_db - ul_snr_db == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("config validation rejects out-of-range fields") {
  ScenarioConfig cfg;
  cfg.num_cues = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.max_d2d_length = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.bandwidth_hz = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ScenarioConfig{};
  cfg.sic_db = -5.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
