#include "fdcell/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdcell {

std::string to_string(LinkClass c) {
  switch (c) {
    case LinkClass::Dl: return "dl";
    case LinkClass::Ul: return "ul";
    case LinkClass::D2d: return "d2d";
  }
  return "?";
}

std::vector<double> per_link_average_throughputs(const SimulationTrace& trace, LinkClass cls) {
  const int n = cls == LinkClass::D2d ? trace.num_d2d : trace.num_cues;
  std::vector<double> sums(n, 0.0);
  for (const TtiDecision& d : trace.decisions) {
    switch (cls) {
      case LinkClass::Dl:
        if (d.selection.dl != kEmpty) sums[d.selection.dl] += d.rates.dl;
        break;
      case LinkClass::Ul:
        if (d.selection.ul != kEmpty) sums[d.selection.ul] += d.rates.ul;
        break;
      case LinkClass::D2d:
        if (d.selection.d2d != kEmpty) sums[d.selection.d2d] += d.rates.d2d;
        break;
    }
  }
  const double ttis = static_cast<double>(trace.decisions.size());
  for (double& s : sums) s /= ttis;
  return sums;
}

std::vector<double> pooled_link_averages(std::span<const SimulationTrace> traces, LinkClass cls) {
  std::vector<double> pooled;
  for (const SimulationTrace& t : traces) {
    const auto per_link = per_link_average_throughputs(t, cls);
    pooled.insert(pooled.end(), per_link.begin(), per_link.end());
  }
  return pooled;
}

std::vector<CdfPoint> make_cdf(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  std::vector<CdfPoint> cdf;
  cdf.reserve(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    cdf.push_back(CdfPoint{samples[i], static_cast<double>(i + 1) / n});
  }
  return cdf;
}

std::vector<CdfPoint> throughput_cdf(std::span<const SimulationTrace> traces, LinkClass cls) {
  return make_cdf(pooled_link_averages(traces, cls));
}

CombinationShares combination_distribution(const SimulationTrace& trace) {
  return combination_distribution(std::span<const SimulationTrace>(&trace, 1));
}

CombinationShares combination_distribution(std::span<const SimulationTrace> traces) {
  std::array<long, kNumCombinationClasses> counts{};
  long total = 0;
  for (const SimulationTrace& t : traces) {
    for (const TtiDecision& d : t.decisions) {
      ++counts[static_cast<int>(d.combination_class)];
      ++total;
    }
  }
  if (total == 0) throw std::invalid_argument("combination_distribution: empty trace");

  CombinationShares shares;
  for (int i = 0; i < kNumCombinationClasses; ++i) {
    shares.pct[i] = 100.0 * static_cast<double>(counts[i]) / static_cast<double>(total);
    const auto c = static_cast<CombinationClass>(i);
    if (is_simultaneous(c)) shares.simultaneous_pct += shares.pct[i];
    if (contains_d2d(c)) shares.d2d_pct += shares.pct[i];
  }
  return shares;
}

double aggregate_throughput_bps(const SimulationTrace& trace) {
  double sum = 0.0;
  for (const TtiDecision& d : trace.decisions) {
    sum += d.rates.dl + d.rates.ul + d.rates.d2d;
  }
  return sum / static_cast<double>(trace.decisions.size());
}

double mean_aggregate_throughput_bps(std::span<const SimulationTrace> traces) {
  double sum = 0.0;
  for (const SimulationTrace& t : traces) sum += aggregate_throughput_bps(t);
  return sum / static_cast<double>(traces.size());
}

std::optional<double> energy_efficiency_bpj(std::span<const SimulationTrace> traces) {
  double bits = 0.0;
  double joules = 0.0;
  for (const SimulationTrace& t : traces) {
    for (const TtiDecision& d : t.decisions) {
      bits += (d.rates.dl + d.rates.ul + d.rates.d2d) * t.tti_duration_s;
      joules += (d.powers.dl_w + d.powers.ul_w + d.powers.d2d_w) * t.tti_duration_s;
    }
  }
  if (joules <= 0.0) return std::nullopt;
  return bits / joules;
}

double percentile(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("percentile: no samples");
  if (q <= 0.0 || q > 100.0) throw std::invalid_argument("percentile: q must be in (0, 100]");
  std::sort(samples.begin(), samples.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(q / 100.0 * static_cast<double>(samples.size())));
  return samples[rank == 0 ? 0 : rank - 1];
}

}  // namespace fdcell
