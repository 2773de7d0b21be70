#include "fdcell/utility.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcell {

void UtilityConfig::validate() const {
  if (!(beta > 0.0 && beta < 1.0) || !(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("utility config: beta and gamma must lie in (0, 1)");
  }
  if (std::abs(beta + gamma - 1.0) > 1e-12) {
    throw std::invalid_argument("utility config: beta + gamma must equal 1");
  }
  if (w_dl < 0.0 || w_dl > 1.0 || w_ul < 0.0 || w_ul > 1.0 || w_d2d < 0.0 || w_d2d > 1.0) {
    throw std::invalid_argument("utility config: weightages must lie in [0, 1]");
  }
  if (epsilon_rate <= 0.0) {
    throw std::invalid_argument("utility config: epsilon_rate must be > 0");
  }
}

RateState RateState::initial(int num_cues, int num_d2d, const UtilityConfig& cfg) {
  cfg.validate();
  RateState st;
  st.beta = cfg.beta;
  st.gamma = cfg.gamma;
  st.epsilon_rate = cfg.epsilon_rate;
  st.avg_dl.assign(num_cues, cfg.epsilon_rate);
  st.avg_ul.assign(num_cues, cfg.epsilon_rate);
  st.avg_d2d.assign(num_d2d, cfg.epsilon_rate);
  st.w_dl.assign(num_cues, cfg.w_dl);
  st.w_ul.assign(num_cues, cfg.w_ul);
  st.w_d2d.assign(num_d2d, cfg.w_d2d);
  return st;
}

double RateState::weight_sum() const {
  double sum = 0.0;
  for (double w : w_dl) sum += w;
  for (double w : w_ul) sum += w;
  for (double w : w_d2d) sum += w;
  return sum;
}

namespace {

inline double ema_step(double beta, double gamma, double avg, double inst, double floor) {
  return std::max(beta * avg + gamma * inst, floor);
}

}  // namespace

RateState update_average_rates(const RateState& state, const Selection& sel,
                               const RateTriple& inst_rates) {
  RateState next = state;
  const double b = state.beta;
  const double g = state.gamma;
  const double eps = state.epsilon_rate;
  for (std::size_t i = 0; i < next.avg_dl.size(); ++i) {
    const double r = (sel.dl == static_cast<int>(i)) ? inst_rates.dl : 0.0;
    next.avg_dl[i] = ema_step(b, g, state.avg_dl[i], r, eps);
  }
  for (std::size_t i = 0; i < next.avg_ul.size(); ++i) {
    const double r = (sel.ul == static_cast<int>(i)) ? inst_rates.ul : 0.0;
    next.avg_ul[i] = ema_step(b, g, state.avg_ul[i], r, eps);
  }
  for (std::size_t i = 0; i < next.avg_d2d.size(); ++i) {
    const double r = (sel.d2d == static_cast<int>(i)) ? inst_rates.d2d : 0.0;
    next.avg_d2d[i] = ema_step(b, g, state.avg_d2d[i], r, eps);
  }
  return next;
}

double objective_value(const RateState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.avg_dl.size(); ++i) sum += state.w_dl[i] * std::log(state.avg_dl[i]);
  for (std::size_t i = 0; i < state.avg_ul.size(); ++i) sum += state.w_ul[i] * std::log(state.avg_ul[i]);
  for (std::size_t i = 0; i < state.avg_d2d.size(); ++i) sum += state.w_d2d[i] * std::log(state.avg_d2d[i]);
  return sum;
}

double verify_appendix_identity(const RateState& state_before, const Scenario& sc,
                                const CqiTable& cqi, const Selection& sel,
                                const PowerAllocation& p) {
  const UtilityEval ev = evaluate_selection(sc, cqi, sel, p, state_before);
  const RateState state_after = update_average_rates(state_before, sel, ev.rates);
  const double lhs = objective_value(state_after);
  const double rhs = objective_value(state_before) +
                     state_before.weight_sum() * std::log(state_before.beta) + ev.utility;
  return std::abs(lhs - rhs);
}

}  // namespace fdcell
