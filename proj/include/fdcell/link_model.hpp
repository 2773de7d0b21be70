#pragma once

#include <vector>

#include "fdcell/scenario.hpp"

namespace fdcell {

inline constexpr int kEmpty = -1;

// A candidate schedule for one TTI: a downlink CUE, an uplink CUE, and a
// D2D link, any of which may be empty. The same CUE cannot occupy both
// cellular slots.
struct Selection {
  int dl = kEmpty;
  int ul = kEmpty;
  int d2d = kEmpty;

  bool any_active() const { return dl != kEmpty || ul != kEmpty || d2d != kEmpty; }

  bool valid(int num_cues, int num_d2d) const {
    if (dl != kEmpty && (dl < 0 || dl >= num_cues)) return false;
    if (ul != kEmpty && (ul < 0 || ul >= num_cues)) return false;
    if (d2d != kEmpty && (d2d < 0 || d2d >= num_d2d)) return false;
    if (dl != kEmpty && dl == ul) return false;
    return true;
  }

  bool operator==(const Selection&) const = default;
};

// Transmit powers in watts for the three sources of a selection. Empty
// slots carry exactly zero power.
struct PowerAllocation {
  double dl_w = 0.0;   // FBS transmit power
  double ul_w = 0.0;   // UL CUE transmit power
  double d2d_w = 0.0;  // D2D transmitter power

  bool operator==(const PowerAllocation&) const = default;
};

struct SinrTriple {
  double dl = 0.0;
  double ul = 0.0;
  double d2d = 0.0;

  bool operator==(const SinrTriple&) const = default;
};

struct CqiRow {
  double threshold_db;  // lowest SINR that earns this class
  double efficiency;    // bits/s/Hz
};

// Stepwise SINR -> spectral efficiency map. Thresholds and efficiencies
// are strictly increasing; an SINR below the first threshold maps to zero
// efficiency. Equality with a threshold earns that class.
class CqiTable {
 public:
  // 15-class LTE default; class 10 sits at 10.37 dB.
  CqiTable();
  explicit CqiTable(std::vector<CqiRow> rows);

  double efficiency_for(double sinr_linear) const {
    // Comparison runs in linear domain; thresholds were converted once.
    int hit = -1;
    for (int i = static_cast<int>(thresholds_linear_.size()) - 1; i >= 0; --i) {
      if (sinr_linear >= thresholds_linear_[i]) {
        hit = i;
        break;
      }
    }
    return hit < 0 ? 0.0 : rows_[hit].efficiency;
  }

  const std::vector<CqiRow>& rows() const { return rows_; }
  double min_threshold_db() const { return rows_.front().threshold_db; }
  double min_threshold_linear() const { return thresholds_linear_.front(); }
  double max_efficiency() const { return rows_.back().efficiency; }

 private:
  std::vector<CqiRow> rows_;
  std::vector<double> thresholds_linear_;
};

// SINRs of a scheduled selection. Interference terms of empty slots vanish
// because their powers are zero; the guards below only skip gain lookups
// for indices that do not exist.

inline double sinr_downlink(const Scenario& sc, const Selection& sel, const PowerAllocation& p) {
  const GainTable& g = sc.gains;
  double denom = sc.noise_dl_w;
  if (sel.ul != kEmpty) denom += g.cue_to_cue(sel.ul, sel.dl) * p.ul_w;
  if (sel.d2d != kEmpty) denom += g.d2d_tx_to_cue(sel.d2d, sel.dl) * p.d2d_w;
  return g.fbs_to_cue[sel.dl] * p.dl_w / denom;
}

inline double sinr_uplink(const Scenario& sc, const Selection& sel, const PowerAllocation& p,
                          double sic_linear) {
  const GainTable& g = sc.gains;
  double denom = sc.noise_ul_w + p.dl_w / sic_linear;  // residual self-interference
  if (sel.d2d != kEmpty) denom += g.d2d_tx_to_fbs[sel.d2d] * p.d2d_w;
  return g.cue_to_fbs[sel.ul] * p.ul_w / denom;
}

inline double sinr_d2d(const Scenario& sc, const Selection& sel, const PowerAllocation& p) {
  const GainTable& g = sc.gains;
  double denom = sc.noise_d2d_w + g.fbs_to_d2d_rx[sel.d2d] * p.dl_w;
  if (sel.ul != kEmpty) denom += g.cue_to_d2d_rx(sel.ul, sel.d2d) * p.ul_w;
  return g.d2d_tx_to_rx[sel.d2d] * p.d2d_w / denom;
}

// All three SINRs at once, using the scenario's configured SIC. Fields of
// empty slots are left at zero.
inline SinrTriple compute_sinrs(const Scenario& sc, const Selection& sel,
                                const PowerAllocation& p) {
  SinrTriple s;
  if (sel.dl != kEmpty) s.dl = sinr_downlink(sc, sel, p);
  if (sel.ul != kEmpty) s.ul = sinr_uplink(sc, sel, p, sc.sic_linear);
  if (sel.d2d != kEmpty) s.d2d = sinr_d2d(sc, sel, p);
  return s;
}

inline double spectral_efficiency(double sinr_linear, const CqiTable& table) {
  return table.efficiency_for(sinr_linear);
}

inline double instantaneous_rate_bps(double bandwidth_hz, double sinr_linear,
                                     const CqiTable& table) {
  return bandwidth_hz * table.efficiency_for(sinr_linear);
}

}  // namespace fdcell
