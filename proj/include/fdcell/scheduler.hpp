#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdcell/link_model.hpp"
#include "fdcell/optimizer.hpp"
#include "fdcell/scenario.hpp"
#include "fdcell/utility.hpp"

namespace fdcell {

enum class SchedulerMode { Fpa, Dpa, Hd };

std::string to_string(SchedulerMode mode);
SchedulerMode scheduler_mode_from_string(const std::string& name);

// Which link slots a TTI decision occupies. Order matters: it is the CSV
// and report ordering.
enum class CombinationClass : int {
  UlDlD2d = 0,
  UlDl = 1,
  UlD2d = 2,
  DlD2d = 3,
  Ul = 4,
  Dl = 5,
  D2d = 6,
  None = 7,
};

inline constexpr int kNumCombinationClasses = 8;

std::string to_string(CombinationClass c);
CombinationClass classify(const Selection& sel);

// At least two concurrent links.
bool is_simultaneous(CombinationClass c);
bool contains_d2d(CombinationClass c);

struct TtiDecision {
  Selection selection;
  PowerAllocation powers;
  SinrTriple sinrs;
  RateTriple rates;
  double utility = 0.0;
  CombinationClass combination_class = CombinationClass::None;
};

struct SimulationTrace {
  std::vector<TtiDecision> decisions;
  RateState final_state;
  SchedulerMode mode = SchedulerMode::Fpa;
  double tti_duration_s = 1e-3;
  std::uint64_t scenario_seed = 0;
  int num_cues = 0;
  int num_d2d = 0;
  UtilityConfig utility_config;
};

// Every (dl, ul, d2d) triple with dl != ul unless both empty, minus the
// all-empty triple. HD drops the triples where dl and ul are both
// occupied. Order is canonical: dl outermost, then ul, then d2d; within a
// slot, real indices ascend and the empty option comes last. Tie-breaking
// everywhere is "first in this order".
std::vector<Selection> enumerate_selections(int num_cues, int num_d2d, SchedulerMode mode);

// Peak powers for the occupied slots of a selection, zero elsewhere.
PowerAllocation peak_powers(const Scenario& sc, const Selection& sel);

// Full-power mode: evaluate every candidate at peak power, return the
// argmax. No SINR floors; the best utility may be <= 0 and the decision is
// still emitted.
TtiDecision schedule_fpa(const Scenario& sc, const CqiTable& cqi, const RateState& state);

// Dynamic power mode: per candidate, maximize utility over the power box
// subject to the SINR floors, then take the best feasible candidate.
// Falls back to the all-empty decision when nothing is feasible.
TtiDecision schedule_dpa(const Scenario& sc, const CqiTable& cqi, const RateState& state,
                         const OptimizerConfig& opt_cfg, const SinrFloors& floors);

// Half-duplex baseline: identical to DPA over the HD-restricted
// enumeration (no simultaneous UL and DL at the base station).
TtiDecision schedule_hd(const Scenario& sc, const CqiTable& cqi, const RateState& state,
                        const OptimizerConfig& opt_cfg, const SinrFloors& floors);

// Variants over a caller-built candidate list; the TTI loop reuses one
// enumeration across TTIs.
TtiDecision schedule_fpa_over(std::span<const Selection> candidates, const Scenario& sc,
                              const CqiTable& cqi, const RateState& state);
TtiDecision schedule_dpa_over(std::span<const Selection> candidates, const Scenario& sc,
                              const CqiTable& cqi, const RateState& state,
                              const OptimizerConfig& opt_cfg, const SinrFloors& floors);

// Sequential multi-TTI loop: schedule, then smooth every link's average.
// Deterministic for fixed inputs.
SimulationTrace run_simulation(const Scenario& sc, const CqiTable& cqi, SchedulerMode mode,
                               int num_ttis, const UtilityConfig& utility_cfg,
                               const OptimizerConfig& opt_cfg, const SinrFloors& floors,
                               double tti_duration_s = 1e-3);

}  // namespace fdcell
