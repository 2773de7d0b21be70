#include <doctest.h>

#include <stdexcept>

#include "fdcell/metrics.hpp"
#include "fdcell/rng.hpp"

using namespace fdcell;

namespace {

TtiDecision make_tti(Selection sel, double r_dl, double r_ul, double r_d2d, double p_dl = 0.0,
                     double p_ul = 0.0, double p_d2d = 0.0) {
  TtiDecision d;
  d.selection = sel;
  d.rates = RateTriple{r_dl, r_ul, r_d2d};
  d.powers = PowerAllocation{p_dl, p_ul, p_d2d};
  d.combination_class = classify(sel);
  return d;
}

SimulationTrace synthetic_trace(int num_cues, int num_d2d, std::vector<TtiDecision> decisions) {
  SimulationTrace tr;
  tr.num_cues = num_cues;
  tr.num_d2d = num_d2d;
  tr.tti_duration_s = 1e-3;
  tr.decisions = std::move(decisions);
  return tr;
}

SimulationTrace random_trace(Rng& rng, int num_cues, int num_d2d, int ttis) {
  std::vector<TtiDecision> ds;
  for (int t = 0; t < ttis; ++t) {
    auto draw = [&](int n) {
      const int v = static_cast<int>(rng.uniform(0.0, n + 1));
      return v >= n ? kEmpty : v;
    };
    Selection sel{draw(num_cues), draw(num_cues), draw(num_d2d)};
    if (sel.dl != kEmpty && sel.dl == sel.ul) sel.ul = kEmpty;
    ds.push_back(make_tti(sel, sel.dl != kEmpty ? rng.uniform(0.0, 5e7) : 0.0,
                          sel.ul != kEmpty ? rng.uniform(0.0, 5e7) : 0.0,
                          sel.d2d != kEmpty ? rng.uniform(0.0, 5e7) : 0.0,
                          sel.dl != kEmpty ? rng.uniform(0.0, 1.5e-3) : 0.0,
                          sel.ul != kEmpty ? rng.uniform(0.0, 1.2e-3) : 0.0,
                          sel.d2d != kEmpty ? rng.uniform(0.0, 1.2e-3) : 0.0));
  }
  return synthetic_trace(num_cues, num_d2d, std::move(ds));
}

}  // namespace

TEST_CASE("per-link averages: hand-computed two-link trace") {
  // CUE 0 serves DL at 10 Mbit/s for 2 of 4 TTIs, D2DL 0 at 40 Mbit/s for
  // 1 of 4; everything else idle.
  auto tr = synthetic_trace(2, 1, {
      make_tti(Selection{0, kEmpty, kEmpty}, 1e7, 0, 0),
      make_tti(Selection{0, kEmpty, kEmpty}, 1e7, 0, 0),
      make_tti(Selection{kEmpty, kEmpty, 0}, 0, 0, 4e7),
      make_tti(Selection{kEmpty, 1, kEmpty}, 0, 2e7, 0),
  });
  const auto dl = per_link_average_throughputs(tr, LinkClass::Dl);
  REQUIRE(dl.size() == 2);
  CHECK(dl[0] == doctest::Approx(5e6));
  CHECK(dl[1] == 0.0);
  const auto ul = per_link_average_throughputs(tr, LinkClass::Ul);
  CHECK(ul[0] == 0.0);
  CHECK(ul[1] == doctest::Approx(5e6));
  const auto d2d = per_link_average_throughputs(tr, LinkClass::D2d);
  REQUIRE(d2d.size() == 1);
  CHECK(d2d[0] == doctest::Approx(1e7));
}

TEST_CASE("single constant-rate link yields a one-step CDF") {
  auto tr = synthetic_trace(1, 1, {
      make_tti(Selection{kEmpty, kEmpty, 0}, 0, 0, 3e7),
      make_tti(Selection{kEmpty, kEmpty, 0}, 0, 0, 3e7),
  });
  const SimulationTrace traces[] = {tr};
  const auto cdf = throughput_cdf(traces, LinkClass::D2d);
  REQUIRE(cdf.size() == 1);
  CHECK(cdf[0].throughput_bps == doctest::Approx(3e7));
  CHECK(cdf[0].fraction == 1.0);
}

TEST_CASE("CDFs are sorted, non-decreasing, and end at one") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SimulationTrace traces[] = {random_trace(rng, 4, 2, 60), random_trace(rng, 4, 2, 60)};
    for (auto cls : {LinkClass::Dl, LinkClass::Ul, LinkClass::D2d}) {
      const auto cdf = throughput_cdf(traces, cls);
      REQUIRE_FALSE(cdf.empty());
      CHECK(cdf.back().fraction == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t i = 1; i < cdf.size(); ++i) {
        CHECK(cdf[i].throughput_bps >= cdf[i - 1].throughput_bps);
        CHECK(cdf[i].fraction > cdf[i - 1].fraction);
      }
    }
  }
}

TEST_CASE("combination distribution: pure-DL trace and percentage sum") {
  auto all_dl = synthetic_trace(2, 1, {
      make_tti(Selection{0, kEmpty, kEmpty}, 1e7, 0, 0),
      make_tti(Selection{1, kEmpty, kEmpty}, 1e7, 0, 0),
  });
  const CombinationShares s = combination_distribution(all_dl);
  CHECK(s.pct[static_cast<int>(CombinationClass::Dl)] == doctest::Approx(100.0));
  CHECK(s.simultaneous_pct == 0.0);
  CHECK(s.d2d_pct == 0.0);

  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SimulationTrace tr = random_trace(rng, 4, 2, 97);
    const CombinationShares shares = combination_distribution(tr);
    double total = 0.0;
    for (double v : shares.pct) total += v;
    CHECK(total == doctest::Approx(100.0).epsilon(1e-11));
  }
}

TEST_CASE("combination aggregates count multi-link and D2D-bearing classes") {
  auto tr = synthetic_trace(2, 1, {
      make_tti(Selection{0, 1, 0}, 1e7, 1e7, 1e7),        // ul+dl+d2d
      make_tti(Selection{0, 1, kEmpty}, 1e7, 1e7, 0),     // ul+dl
      make_tti(Selection{kEmpty, kEmpty, 0}, 0, 0, 1e7),  // d2d only
      make_tti(Selection{0, kEmpty, kEmpty}, 1e7, 0, 0),  // dl only
  });
  const CombinationShares s = combination_distribution(tr);
  CHECK(s.simultaneous_pct == doctest::Approx(50.0));
  CHECK(s.d2d_pct == doctest::Approx(50.0));
  CHECK(combination_distribution(std::span<const SimulationTrace>(&tr, 1)).simultaneous_pct ==
        doctest::Approx(50.0));
}

TEST_CASE("tallied TTIs equal the trace length") {
  Rng rng(7);
  const SimulationTrace tr = random_trace(rng, 3, 2, 83);
  const CombinationShares s = combination_distribution(tr);
  double total = 0.0;
  for (double v : s.pct) total += v;
  CHECK(total * tr.decisions.size() / 100.0 == doctest::Approx(83.0).epsilon(1e-9));
}

TEST_CASE("energy efficiency: closed forms") {
  // one TTI, one DL link: (r tau) / (p tau) = r / p
  auto tr = synthetic_trace(1, 1, {make_tti(Selection{0, kEmpty, kEmpty}, 2e7, 0, 0, 1e-3)});
  const SimulationTrace traces[] = {tr};
  auto ee = energy_efficiency_bpj(traces);
  REQUIRE(ee.has_value());
  CHECK(*ee == doctest::Approx(2e7 / 1e-3));

  // halving every power with identical rates doubles the metric
  Rng rng(9);
  SimulationTrace full = random_trace(rng, 3, 2, 40);
  SimulationTrace halved = full;
  for (TtiDecision& d : halved.decisions) {
    d.powers.dl_w /= 2.0;
    d.powers.ul_w /= 2.0;
    d.powers.d2d_w /= 2.0;
  }
  const SimulationTrace fh[] = {full};
  const SimulationTrace hh[] = {halved};
  auto e_full = energy_efficiency_bpj(fh);
  auto e_half = energy_efficiency_bpj(hh);
  REQUIRE(e_full.has_value());
  REQUIRE(e_half.has_value());
  CHECK(*e_half == doctest::Approx(2.0 * *e_full).epsilon(1e-12));

  // a run that never transmits has no defined efficiency
  auto idle = synthetic_trace(1, 1, {make_tti(Selection{kEmpty, kEmpty, kEmpty}, 0, 0, 0)});
  const SimulationTrace ih[] = {idle};
  CHECK_FALSE(energy_efficiency_bpj(ih).has_value());
}

TEST_CASE("aggregate throughput equals the sum of per-class delivered bits") {
  Rng rng(11);
  const SimulationTrace tr = random_trace(rng, 4, 2, 70);
  double from_classes = 0.0;
  for (auto cls : {LinkClass::Dl, LinkClass::Ul, LinkClass::D2d}) {
    for (double v : per_link_average_throughputs(tr, cls)) from_classes += v;
  }
  CHECK(aggregate_throughput_bps(tr) == doctest::Approx(from_classes).epsilon(1e-12));
}

TEST_CASE("metric recomputation from a stored trace is bit-identical") {
  Rng rng(13);
  const SimulationTrace tr = random_trace(rng, 4, 2, 50);
  const SimulationTrace traces[] = {tr};
  const auto cdf1 = throughput_cdf(traces, LinkClass::Dl);
  const auto cdf2 = throughput_cdf(traces, LinkClass::Dl);
  REQUIRE(cdf1.size() == cdf2.size());
  for (std::size_t i = 0; i < cdf1.size(); ++i) {
    CHECK(cdf1[i].throughput_bps == cdf2[i].throughput_bps);
    CHECK(cdf1[i].fraction == cdf2[i].fraction);
  }
  CHECK(aggregate_throughput_bps(tr) == aggregate_throughput_bps(tr));
  const CombinationShares a = combination_distribution(tr);
  const CombinationShares b = combination_distribution(tr);
  CHECK(a.pct == b.pct);
}

TEST_CASE("nearest-rank percentile") {
  std::vector<double> s{5.0, 1.0, 3.0, 2.0, 4.0};
  CHECK(percentile(s, 50) == 3.0);
  CHECK(percentile(s, 60) == 3.0);
  CHECK(percentile(s, 61) == 4.0);
  CHECK(percentile(s, 100) == 5.0);
  CHECK(percentile(s, 1) == 1.0);
  CHECK_THROWS_AS(percentile({}, 50), std::invalid_argument);
  CHECK_THROWS_AS(percentile(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(percentile(s, 101.0), std::invalid_argument);
}

TEST_CASE("empty-class queries return empty sample sets") {
  auto tr = synthetic_trace(2, 0, {make_tti(Selection{0, kEmpty, kEmpty}, 1e7, 0, 0)});
  CHECK(per_link_average_throughputs(tr, LinkClass::D2d).empty());
  const SimulationTrace traces[] = {tr};
  CHECK(throughput_cdf(traces, LinkClass::D2d).empty());
}
