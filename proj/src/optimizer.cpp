#include "fdcell/optimizer.hpp"

#include <stdexcept>

namespace fdcell {

void BoxBounds::validate() const {
  for (int d = 0; d < 3; ++d) {
    if (lower[d] < 0.0 || lower[d] > upper[d]) {
      throw std::invalid_argument("box bounds: need 0 <= lower <= upper per dimension");
    }
  }
}

void OptimizerConfig::validate() const {
  if (!(mesh_contraction > 0.0 && mesh_contraction < 1.0 && mesh_expansion > 1.0)) {
    throw std::invalid_argument("optimizer config: need 0 < contraction < 1 < expansion");
  }
  if (initial_mesh <= 0.0 || mesh_tolerance <= 0.0) {
    throw std::invalid_argument("optimizer config: mesh sizes must be > 0");
  }
  if (max_evaluations < 1) {
    throw std::invalid_argument("optimizer config: max_evaluations must be >= 1");
  }
}

SinrFloors default_sinr_floors(const CqiTable& table) {
  const double floor = table.min_threshold_linear();
  return SinrFloors{floor, floor, floor};
}

}  // namespace fdcell
