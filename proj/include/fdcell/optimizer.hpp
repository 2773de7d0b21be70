#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "fdcell/link_model.hpp"

namespace fdcell {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-source power box for one candidate selection. Dimension order is
// fixed: 0 = DL (FBS), 1 = UL CUE, 2 = D2D transmitter. Inactive
// dimensions (empty slots) stay pinned at zero.
struct BoxBounds {
  std::array<double, 3> lower{0.0, 0.0, 0.0};
  std::array<double, 3> upper{0.0, 0.0, 0.0};
  std::array<bool, 3> active{false, false, false};

  void validate() const;
};

// Minimum required SINRs, linear, checked only on active slots.
struct SinrFloors {
  double dl = 0.0;
  double ul = 0.0;
  double d2d = 0.0;

  std::array<double, 3> as_array() const { return {dl, ul, d2d}; }
};

// Floors default to the lowest CQI switching point: below it the rate is
// zero, so lower floors would be vacuous.
SinrFloors default_sinr_floors(const CqiTable& table);

struct OptimizerConfig {
  double initial_mesh = 0.25;      // fraction of each box range
  double mesh_contraction = 0.5;
  double mesh_expansion = 2.0;
  double mesh_tolerance = 1e-4;    // fraction of each box range
  int max_evaluations = 2000;
  bool seed_full_power = true;     // upper corner of the box
  bool seed_center = true;
  int coarse_grid_levels = 5;      // 0 or 1 disables the grid seed
  // Log-spaced grid levels (decades below the upper bound, plus zero).
  // The rate map is stepwise in dB, so its plateau corners spread over
  // decades of power; a linear grid never probes the low decades.
  bool coarse_grid_log = true;

  void validate() const;
};

struct OptResult {
  PowerAllocation best_power;
  double best_utility = kNegInf;
  bool feasible = false;
  long evaluations = 0;
};

// What the solver needs from one objective probe: the utility plus the
// SINRs the feasibility filter is applied to.
struct CandidateEval {
  double utility = 0.0;
  SinrTriple sinrs;
};

inline double pa_get(const PowerAllocation& p, int dim) {
  return dim == 0 ? p.dl_w : dim == 1 ? p.ul_w : p.d2d_w;
}

inline void pa_set(PowerAllocation& p, int dim, double v) {
  (dim == 0 ? p.dl_w : dim == 1 ? p.ul_w : p.d2d_w) = v;
}

inline bool sinr_floors_met(const SinrTriple& s, const SinrFloors& f,
                            const std::array<bool, 3>& active) {
  if (active[0] && s.dl < f.dl) return false;
  if (active[1] && s.ul < f.ul) return false;
  if (active[2] && s.d2d < f.d2d) return false;
  return true;
}

// Power-box and SINR-floor recheck independent of any solver bookkeeping.
inline bool satisfies_constraints(const PowerAllocation& p, const BoxBounds& b,
                                  const SinrTriple& s, const SinrFloors& f) {
  for (int d = 0; d < 3; ++d) {
    const double v = pa_get(p, d);
    if (!b.active[d]) {
      if (v != 0.0) return false;
      continue;
    }
    if (v < b.lower[d] || v > b.upper[d]) return false;
  }
  return sinr_floors_met(s, f, b.active);
}

namespace detail {

inline double total_power(const PowerAllocation& p) { return p.dl_w + p.ul_w + p.d2d_w; }

// Exact utility ties resolve toward less transmit power. The rate map is
// stepwise, so optima sit on plateaus; without this rule the solver would
// report whichever plateau point it happened to reach first.
inline bool better_point(double utility, const PowerAllocation& p, double best_utility,
                         const PowerAllocation& best_p) {
  if (utility != best_utility) return utility > best_utility;
  return total_power(p) < total_power(best_p);
}

template <class Objective>
class FilteredObjective {
 public:
  // prefer_less_power selects the tie rule: the pattern search resolves
  // exact utility ties toward less transmit power, the grid oracle keeps
  // its first (lexicographically smallest) hit.
  FilteredObjective(Objective& obj, const SinrFloors& floors, const std::array<bool, 3>& active,
                    bool prefer_less_power)
      : obj_(obj), floors_(floors), active_(active), prefer_less_power_(prefer_less_power) {}

  // Returns the utility, or -inf when a floor is violated. Every call
  // counts as one evaluation and may improve the running best.
  double probe(const PowerAllocation& p, OptResult& best) {
    const CandidateEval ev = obj_(p);
    ++best.evaluations;
    if (!sinr_floors_met(ev.sinrs, floors_, active_)) return kNegInf;
    const bool take = !best.feasible ||
                      (prefer_less_power_
                           ? better_point(ev.utility, p, best.best_utility, best.best_power)
                           : ev.utility > best.best_utility);
    if (take) {
      best.best_power = p;
      best.best_utility = ev.utility;
      best.feasible = true;
    }
    return ev.utility;
  }

 private:
  Objective& obj_;
  const SinrFloors& floors_;
  const std::array<bool, 3>& active_;
  bool prefer_less_power_;
};

inline PowerAllocation clip_to_box(PowerAllocation p, const BoxBounds& b) {
  for (int d = 0; d < 3; ++d) {
    if (!b.active[d]) {
      pa_set(p, d, 0.0);
      continue;
    }
    pa_set(p, d, std::clamp(pa_get(p, d), b.lower[d], b.upper[d]));
  }
  return p;
}

// Seed-grid levels for one dimension: uniform over the box, or zero plus
// one level per decade up to the upper bound.
inline std::vector<double> seed_levels(const BoxBounds& b, int dim, int count, bool log_spaced) {
  if (!b.active[dim]) return {0.0};
  std::vector<double> levels;
  levels.reserve(count);
  if (log_spaced) {
    levels.push_back(b.lower[dim]);
    for (int i = count - 2; i >= 0; --i) {
      double v = b.upper[dim] * std::pow(10.0, -static_cast<double>(i));
      levels.push_back(std::clamp(v, b.lower[dim], b.upper[dim]));
    }
  } else {
    const double range = b.upper[dim] - b.lower[dim];
    for (int t = 0; t < count; ++t) {
      levels.push_back(b.lower[dim] + range * t / (count - 1));
    }
  }
  return levels;
}

}  // namespace detail

// Exhaustive search over a uniform grid that includes both box endpoints
// of every active dimension. Enumeration is lexicographic in (DL, UL, D2D)
// with strictly-greater replacement, so ties resolve to the smallest power
// vector. Serves as the validation oracle for the pattern search.
template <class Objective>
OptResult grid_search_maximize(Objective&& objective, const BoxBounds& bounds,
                               const SinrFloors& floors, int levels_per_dim) {
  bounds.validate();
  if (levels_per_dim < 2) {
    throw std::invalid_argument("grid search: levels_per_dim must be >= 2");
  }

  std::array<std::vector<double>, 3> levels;
  for (int d = 0; d < 3; ++d) {
    if (!bounds.active[d]) {
      levels[d] = {0.0};
      continue;
    }
    levels[d].reserve(levels_per_dim);
    const double range = bounds.upper[d] - bounds.lower[d];
    for (int t = 0; t < levels_per_dim; ++t) {
      levels[d].push_back(bounds.lower[d] + range * t / (levels_per_dim - 1));
    }
  }

  OptResult best;
  detail::FilteredObjective<std::remove_reference_t<Objective>> filtered(objective, floors,
                                                                         bounds.active, false);
  for (double p0 : levels[0]) {
    for (double p1 : levels[1]) {
      for (double p2 : levels[2]) {
        filtered.probe(PowerAllocation{p0, p1, p2}, best);
      }
    }
  }
  return best;
}

// Generalized pattern search over the active dimensions, maximizing.
// Starts at each multistart point in turn (full-power corner, box center,
// best point of a coarse grid, then any caller-supplied extras); polls the
// signed coordinate directions in a fixed order, moves to the first
// improving feasible point and expands the mesh, contracts otherwise.
// Constraint handling: box violations are clipped, SINR-floor violations
// evaluate to -inf. Every start point is evaluated even when the budget is
// exhausted, so the returned utility is never below the best feasible
// start. Fully deterministic.
template <class Objective>
OptResult pattern_search_maximize(Objective&& objective, const BoxBounds& bounds,
                                  const SinrFloors& floors, const OptimizerConfig& cfg,
                                  std::span<const PowerAllocation> extra_starts = {}) {
  bounds.validate();
  cfg.validate();

  OptResult best;
  detail::FilteredObjective<std::remove_reference_t<Objective>> filtered(objective, floors,
                                                                         bounds.active, true);

  std::vector<int> dims;
  std::array<double, 3> range{0.0, 0.0, 0.0};
  for (int d = 0; d < 3; ++d) {
    if (!bounds.active[d]) continue;
    range[d] = bounds.upper[d] - bounds.lower[d];
    if (range[d] > 0.0) dims.push_back(d);
  }

  std::vector<PowerAllocation> starts;
  if (cfg.seed_full_power) {
    starts.push_back(detail::clip_to_box(
        PowerAllocation{bounds.upper[0], bounds.upper[1], bounds.upper[2]}, bounds));
  }
  if (cfg.seed_center) {
    starts.push_back(detail::clip_to_box(
        PowerAllocation{(bounds.lower[0] + bounds.upper[0]) / 2.0,
                        (bounds.lower[1] + bounds.upper[1]) / 2.0,
                        (bounds.lower[2] + bounds.upper[2]) / 2.0},
        bounds));
  }
  if (cfg.coarse_grid_levels >= 2) {
    std::array<std::vector<double>, 3> levels;
    for (int d = 0; d < 3; ++d) {
      levels[d] = detail::seed_levels(bounds, d, cfg.coarse_grid_levels, cfg.coarse_grid_log);
    }
    PowerAllocation coarse_best =
        detail::clip_to_box(PowerAllocation{bounds.lower[0], bounds.lower[1], bounds.lower[2]},
                            bounds);
    double coarse_value = kNegInf;
    for (double p0 : levels[0]) {
      for (double p1 : levels[1]) {
        for (double p2 : levels[2]) {
          const PowerAllocation p{p0, p1, p2};
          const double v = filtered.probe(p, best);
          if (v > coarse_value) {
            coarse_value = v;
            coarse_best = p;
          }
        }
      }
    }
    starts.push_back(coarse_best);
  }
  starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());
  if (starts.empty()) {
    starts.push_back(detail::clip_to_box(PowerAllocation{}, bounds));
  }

  for (const PowerAllocation& raw_start : starts) {
    PowerAllocation current = detail::clip_to_box(raw_start, bounds);
    double current_value = filtered.probe(current, best);

    if (dims.empty()) continue;

    std::array<double, 3> mesh{0.0, 0.0, 0.0};
    for (int d : dims) mesh[d] = cfg.initial_mesh * range[d];

    while (best.evaluations < cfg.max_evaluations) {
      bool improved = false;
      for (std::size_t i = 0; i < dims.size() && !improved; ++i) {
        const int d = dims[i];
        for (double sign : {+1.0, -1.0}) {
          PowerAllocation cand = current;
          pa_set(cand, d, pa_get(cand, d) + sign * mesh[d]);
          cand = detail::clip_to_box(cand, bounds);
          if (cand == current) continue;  // step clipped away at the boundary
          const double v = filtered.probe(cand, best);
          // accept strict improvements, and equal-utility steps that shed
          // transmit power (descends the rate plateaus)
          const bool accept =
              v > current_value ||
              (v == current_value && v != kNegInf &&
               detail::total_power(cand) < detail::total_power(current));
          if (accept) {
            current = cand;
            current_value = v;
            improved = true;
            break;
          }
          if (best.evaluations >= cfg.max_evaluations) break;
        }
      }
      if (improved) {
        for (int d : dims) mesh[d] = std::min(mesh[d] * cfg.mesh_expansion, range[d]);
      } else {
        bool all_below_tolerance = true;
        for (int d : dims) {
          mesh[d] *= cfg.mesh_contraction;
          if (mesh[d] >= cfg.mesh_tolerance * range[d]) all_below_tolerance = false;
        }
        if (all_below_tolerance) break;
      }
    }
  }
  return best;
}

}  // namespace fdcell
