#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fdcell/scheduler.hpp"

namespace fdcell {

enum class LinkClass : int { Dl = 0, Ul = 1, D2d = 2 };

std::string to_string(LinkClass c);

struct CdfPoint {
  double throughput_bps;
  double fraction;  // cumulative, ends at 1.0
};

// Time-averaged throughput of each link of a class over one trace:
// (sum of instantaneous rate) / num_ttis, zero-rate TTIs included.
std::vector<double> per_link_average_throughputs(const SimulationTrace& trace, LinkClass cls);

// Per-link averages pooled over several traces (links x scenarios samples).
std::vector<double> pooled_link_averages(std::span<const SimulationTrace> traces, LinkClass cls);

// Sorted empirical CDF of a sample set. Empty input gives an empty list.
std::vector<CdfPoint> make_cdf(std::vector<double> samples);

std::vector<CdfPoint> throughput_cdf(std::span<const SimulationTrace> traces, LinkClass cls);

struct CombinationShares {
  std::array<double, kNumCombinationClasses> pct{};  // indexed by CombinationClass
  double simultaneous_pct = 0.0;  // classes with at least two concurrent links
  double d2d_pct = 0.0;           // classes containing the D2D slot
};

CombinationShares combination_distribution(const SimulationTrace& trace);
CombinationShares combination_distribution(std::span<const SimulationTrace> traces);

// Mean over TTIs of the summed instantaneous rates, i.e. delivered bits
// per second of simulated time.
double aggregate_throughput_bps(const SimulationTrace& trace);
double mean_aggregate_throughput_bps(std::span<const SimulationTrace> traces);

// Delivered bits over transmit energy. Empty when the runs never spent
// energy (all-empty degenerate traces).
std::optional<double> energy_efficiency_bpj(std::span<const SimulationTrace> traces);

// Nearest-rank percentile, q in (0, 100].
double percentile(std::vector<double> samples, double q);

}  // namespace fdcell
