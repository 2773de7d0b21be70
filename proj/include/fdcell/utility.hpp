#pragma once

#include <cmath>
#include <vector>

#include "fdcell/link_model.hpp"
#include "fdcell/scenario.hpp"

namespace fdcell {

// Smoothing and weighting knobs for the proportional-fair utility.
struct UtilityConfig {
  double beta = 0.9;    // weight of the previous average
  double gamma = 0.1;   // weight of the instantaneous rate; beta + gamma == 1
  double w_dl = 1.0;    // throughput weightage applied to every DL CUE
  double w_ul = 1.0;
  double w_d2d = 1.0;
  double epsilon_rate = 8e5;  // bits/s floor for the averages

  void validate() const;
};

// Per-link exponentially averaged throughputs plus weightages. This is the
// scheduler's only cross-TTI memory.
struct RateState {
  std::vector<double> avg_dl;   // bits/s, one per CUE
  std::vector<double> avg_ul;   // bits/s, one per CUE
  std::vector<double> avg_d2d;  // bits/s, one per D2D link
  std::vector<double> w_dl;
  std::vector<double> w_ul;
  std::vector<double> w_d2d;
  double beta = 0.9;
  double gamma = 0.1;
  double epsilon_rate = 8e5;

  // Every average starts at the epsilon floor so that a never-served link
  // keeps a large marginal utility.
  static RateState initial(int num_cues, int num_d2d, const UtilityConfig& cfg = {});

  double weight_sum() const;

  bool operator==(const RateState&) const = default;
};

// Instantaneous rates of the three slots of a selection; zero for empty
// slots.
struct RateTriple {
  double dl = 0.0;
  double ul = 0.0;
  double d2d = 0.0;

  bool operator==(const RateTriple&) const = default;
};

struct UtilityEval {
  double utility = 0.0;
  SinrTriple sinrs;
  RateTriple rates;
};

// Marginal proportional-fair gain of serving one scheduled link: how much
// the log of its smoothed average moves beyond the pure decay term.
inline double slot_utility(double w, double beta, double gamma, double avg, double inst_rate) {
  return w * (std::log(beta * avg + gamma * inst_rate) - std::log(beta * avg));
}

// Utility of a (selection, powers) candidate on the current state. Empty
// slots contribute exactly zero. Natural log throughout.
inline UtilityEval evaluate_selection(const Scenario& sc, const CqiTable& cqi,
                                      const Selection& sel, const PowerAllocation& p,
                                      const RateState& state) {
  UtilityEval ev;
  ev.sinrs = compute_sinrs(sc, sel, p);
  const double bw = sc.config.bandwidth_hz;
  if (sel.dl != kEmpty) {
    ev.rates.dl = instantaneous_rate_bps(bw, ev.sinrs.dl, cqi);
    ev.utility += slot_utility(state.w_dl[sel.dl], state.beta, state.gamma,
                               state.avg_dl[sel.dl], ev.rates.dl);
  }
  if (sel.ul != kEmpty) {
    ev.rates.ul = instantaneous_rate_bps(bw, ev.sinrs.ul, cqi);
    ev.utility += slot_utility(state.w_ul[sel.ul], state.beta, state.gamma,
                               state.avg_ul[sel.ul], ev.rates.ul);
  }
  if (sel.d2d != kEmpty) {
    ev.rates.d2d = instantaneous_rate_bps(bw, ev.sinrs.d2d, cqi);
    ev.utility += slot_utility(state.w_d2d[sel.d2d], state.beta, state.gamma,
                               state.avg_d2d[sel.d2d], ev.rates.d2d);
  }
  return ev;
}

inline double utility_value(const Scenario& sc, const CqiTable& cqi, const Selection& sel,
                            const PowerAllocation& p, const RateState& state) {
  return evaluate_selection(sc, cqi, sel, p, state).utility;
}

// One smoothing step for every link. Links outside the selection decay by
// beta; results are floored at epsilon_rate.
RateState update_average_rates(const RateState& state, const Selection& sel,
                               const RateTriple& inst_rates);

// Weighted log-sum of the averages: the global objective the per-TTI
// utility is the increment of.
double objective_value(const RateState& state);

// Residual of the algebraic identity
//   objective(after) == objective(before) + weight_sum * log(beta) + utility.
// Exact as long as no average lands on the epsilon floor. Test hook.
double verify_appendix_identity(const RateState& state_before, const Scenario& sc,
                                const CqiTable& cqi, const Selection& sel,
                                const PowerAllocation& p);

}  // namespace fdcell
