#include "fdcell/scheduler.hpp"

#include <stdexcept>

namespace fdcell {

std::string to_string(SchedulerMode mode) {
  switch (mode) {
    case SchedulerMode::Fpa: return "fpa";
    case SchedulerMode::Dpa: return "dpa";
    case SchedulerMode::Hd: return "hd";
  }
  return "?";
}

SchedulerMode scheduler_mode_from_string(const std::string& name) {
  if (name == "fpa") return SchedulerMode::Fpa;
  if (name == "dpa") return SchedulerMode::Dpa;
  if (name == "hd") return SchedulerMode::Hd;
  throw std::invalid_argument("unknown scheduler mode: " + name);
}

std::string to_string(CombinationClass c) {
  switch (c) {
    case CombinationClass::UlDlD2d: return "ul+dl+d2d";
    case CombinationClass::UlDl: return "ul+dl";
    case CombinationClass::UlD2d: return "ul+d2d";
    case CombinationClass::DlD2d: return "dl+d2d";
    case CombinationClass::Ul: return "ul";
    case CombinationClass::Dl: return "dl";
    case CombinationClass::D2d: return "d2d";
    case CombinationClass::None: return "none";
  }
  return "?";
}

CombinationClass classify(const Selection& sel) {
  const bool d = sel.dl != kEmpty;
  const bool u = sel.ul != kEmpty;
  const bool l = sel.d2d != kEmpty;
  if (d && u && l) return CombinationClass::UlDlD2d;
  if (d && u) return CombinationClass::UlDl;
  if (u && l) return CombinationClass::UlD2d;
  if (d && l) return CombinationClass::DlD2d;
  if (u) return CombinationClass::Ul;
  if (d) return CombinationClass::Dl;
  if (l) return CombinationClass::D2d;
  return CombinationClass::None;
}

bool is_simultaneous(CombinationClass c) {
  switch (c) {
    case CombinationClass::UlDlD2d:
    case CombinationClass::UlDl:
    case CombinationClass::UlD2d:
    case CombinationClass::DlD2d:
      return true;
    default:
      return false;
  }
}

bool contains_d2d(CombinationClass c) {
  switch (c) {
    case CombinationClass::UlDlD2d:
    case CombinationClass::UlD2d:
    case CombinationClass::DlD2d:
    case CombinationClass::D2d:
      return true;
    default:
      return false;
  }
}

namespace {

// Per-slot iteration order: real indices ascending, the empty option last.
std::vector<int> slot_options(int count) {
  std::vector<int> opts;
  opts.reserve(count + 1);
  for (int i = 0; i < count; ++i) opts.push_back(i);
  opts.push_back(kEmpty);
  return opts;
}

}  // namespace

std::vector<Selection> enumerate_selections(int num_cues, int num_d2d, SchedulerMode mode) {
  if (num_cues < 0 || num_d2d < 0) {
    throw std::invalid_argument("enumerate_selections: counts must be >= 0");
  }
  const bool hd = mode == SchedulerMode::Hd;
  const std::vector<int> cue_opts = slot_options(num_cues);
  const std::vector<int> d2d_opts = slot_options(num_d2d);

  std::vector<Selection> out;
  for (int dl : cue_opts) {
    for (int ul : cue_opts) {
      if (dl != kEmpty && dl == ul) continue;
      if (hd && dl != kEmpty && ul != kEmpty) continue;
      for (int d2d : d2d_opts) {
        const Selection sel{dl, ul, d2d};
        if (!sel.any_active()) continue;
        out.push_back(sel);
      }
    }
  }
  return out;
}

PowerAllocation peak_powers(const Scenario& sc, const Selection& sel) {
  PowerAllocation p;
  if (sel.dl != kEmpty) p.dl_w = sc.p_fbs_max_w;
  if (sel.ul != kEmpty) p.ul_w = sc.p_cue_max_w;
  if (sel.d2d != kEmpty) p.d2d_w = sc.p_d2d_max_w;
  return p;
}

namespace {

TtiDecision make_decision(const Scenario& sc, const CqiTable& cqi, const RateState& state,
                          const Selection& sel, const PowerAllocation& p) {
  const UtilityEval ev = evaluate_selection(sc, cqi, sel, p, state);
  TtiDecision d;
  d.selection = sel;
  d.powers = p;
  d.sinrs = ev.sinrs;
  d.rates = ev.rates;
  d.utility = ev.utility;
  d.combination_class = classify(sel);
  return d;
}

TtiDecision all_empty_decision() {
  TtiDecision d;
  d.combination_class = CombinationClass::None;
  return d;
}

BoxBounds bounds_for(const Scenario& sc, const Selection& sel) {
  BoxBounds b;
  if (sel.dl != kEmpty) {
    b.active[0] = true;
    b.upper[0] = sc.p_fbs_max_w;
  }
  if (sel.ul != kEmpty) {
    b.active[1] = true;
    b.upper[1] = sc.p_cue_max_w;
  }
  if (sel.d2d != kEmpty) {
    b.active[2] = true;
    b.upper[2] = sc.p_d2d_max_w;
  }
  return b;
}

}  // namespace

TtiDecision schedule_fpa_over(std::span<const Selection> candidates, const Scenario& sc,
                              const CqiTable& cqi, const RateState& state) {
  bool have_best = false;
  double best_utility = 0.0;
  TtiDecision best;
  for (const Selection& sel : candidates) {
    const PowerAllocation p = peak_powers(sc, sel);
    const double u = utility_value(sc, cqi, sel, p, state);
    if (!have_best || u > best_utility) {
      have_best = true;
      best_utility = u;
      best = make_decision(sc, cqi, state, sel, p);
    }
  }
  return have_best ? best : all_empty_decision();
}

TtiDecision schedule_dpa_over(std::span<const Selection> candidates, const Scenario& sc,
                              const CqiTable& cqi, const RateState& state,
                              const OptimizerConfig& opt_cfg, const SinrFloors& floors) {
  bool have_best = false;
  double best_utility = 0.0;
  Selection best_sel;
  PowerAllocation best_power;

  for (const Selection& sel : candidates) {
    auto objective = [&](const PowerAllocation& p) {
      const UtilityEval ev = evaluate_selection(sc, cqi, sel, p, state);
      return CandidateEval{ev.utility, ev.sinrs};
    };
    const OptResult res =
        pattern_search_maximize(objective, bounds_for(sc, sel), floors, opt_cfg);
    if (!res.feasible) continue;  // no power meets the floors; skip the combination
    if (!have_best || res.best_utility > best_utility) {
      have_best = true;
      best_utility = res.best_utility;
      best_sel = sel;
      best_power = res.best_power;
    }
  }
  if (!have_best) return all_empty_decision();
  return make_decision(sc, cqi, state, best_sel, best_power);
}

TtiDecision schedule_fpa(const Scenario& sc, const CqiTable& cqi, const RateState& state) {
  const auto candidates =
      enumerate_selections(sc.config.num_cues, sc.config.num_d2d_links, SchedulerMode::Fpa);
  return schedule_fpa_over(candidates, sc, cqi, state);
}

TtiDecision schedule_dpa(const Scenario& sc, const CqiTable& cqi, const RateState& state,
                         const OptimizerConfig& opt_cfg, const SinrFloors& floors) {
  const auto candidates =
      enumerate_selections(sc.config.num_cues, sc.config.num_d2d_links, SchedulerMode::Dpa);
  return schedule_dpa_over(candidates, sc, cqi, state, opt_cfg, floors);
}

TtiDecision schedule_hd(const Scenario& sc, const CqiTable& cqi, const RateState& state,
                        const OptimizerConfig& opt_cfg, const SinrFloors& floors) {
  const auto candidates =
      enumerate_selections(sc.config.num_cues, sc.config.num_d2d_links, SchedulerMode::Hd);
  return schedule_dpa_over(candidates, sc, cqi, state, opt_cfg, floors);
}

SimulationTrace run_simulation(const Scenario& sc, const CqiTable& cqi, SchedulerMode mode,
                               int num_ttis, const UtilityConfig& utility_cfg,
                               const OptimizerConfig& opt_cfg, const SinrFloors& floors,
                               double tti_duration_s) {
  if (num_ttis < 1) throw std::invalid_argument("run_simulation: num_ttis must be >= 1");

  const auto candidates =
      enumerate_selections(sc.config.num_cues, sc.config.num_d2d_links, mode);

  SimulationTrace trace;
  trace.mode = mode;
  trace.tti_duration_s = tti_duration_s;
  trace.scenario_seed = sc.config.seed;
  trace.num_cues = sc.config.num_cues;
  trace.num_d2d = sc.config.num_d2d_links;
  trace.utility_config = utility_cfg;
  trace.decisions.reserve(num_ttis);

  RateState state = RateState::initial(sc.config.num_cues, sc.config.num_d2d_links, utility_cfg);
  for (int t = 0; t < num_ttis; ++t) {
    TtiDecision decision;
    switch (mode) {
      case SchedulerMode::Fpa:
        decision = schedule_fpa_over(candidates, sc, cqi, state);
        break;
      case SchedulerMode::Dpa:
      case SchedulerMode::Hd:
        decision = schedule_dpa_over(candidates, sc, cqi, state, opt_cfg, floors);
        break;
    }
    state = update_average_rates(state, decision.selection, decision.rates);
    trace.decisions.push_back(decision);
  }
  trace.final_state = state;
  return trace;
}

}  // namespace fdcell
