#include "fdcell/link_model.hpp"

#include <stdexcept>

#include "fdcell/units.hpp"

namespace fdcell {

namespace {

// 3GPP 15-class spectral efficiencies with the 10%-BLER SINR switching
// points commonly used in LTE system simulations.
std::vector<CqiRow> default_cqi_rows() {
  return {
      {-6.934, 0.1523}, {-5.147, 0.2344}, {-3.18, 0.3770},  {-1.254, 0.6016},
      {0.761, 0.8770},  {2.70, 1.1758},   {4.697, 1.4766},  {6.528, 1.9141},
      {8.576, 2.4063},  {10.37, 2.7305},  {12.30, 3.3223},  {14.18, 3.9023},
      {15.89, 4.5234},  {17.82, 5.1152},  {19.83, 5.5547},
  };
}

}  // namespace

CqiTable::CqiTable() : CqiTable(default_cqi_rows()) {}

CqiTable::CqiTable(std::vector<CqiRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("cqi table: no rows");
  thresholds_linear_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].efficiency <= 0.0) {
      throw std::invalid_argument("cqi table: efficiencies must be > 0");
    }
    if (i > 0) {
      if (rows_[i].threshold_db <= rows_[i - 1].threshold_db) {
        throw std::invalid_argument("cqi table: thresholds must be strictly increasing");
      }
      if (rows_[i].efficiency <= rows_[i - 1].efficiency) {
        throw std::invalid_argument("cqi table: efficiencies must be strictly increasing");
      }
    }
    thresholds_linear_.push_back(db_to_linear(rows_[i].threshold_db));
  }
}

}  // namespace fdcell
