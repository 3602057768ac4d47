#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hypwave {

// One sweep cell: parameters, the weighted kernel value, and whether the
// evaluation failed (failed cells carry zeros for the value fields).
struct SweepCell {
  double r = 0.0;
  double t = 0.0;
  double s = 0.0;
  int kind = 0;  // 0 = sine, 1 = cosine
  double value_abs = 0.0;
  double weight = 0.0;
  double ratio = 0.0;
  double err_est = 0.0;
  bool failed = false;
};

// Outcome of checking one bound over a grid.  sup_ratio is the largest observed
// |quantity| / envelope; a bound "passes" when the sup stays under its ceiling,
// the grid-doubling delta is small, and almost no cells failed to evaluate.
struct BoundReport {
  std::string bound_id;
  double sup_ratio = 0.0;
  // Argument at which the sup was attained, as labelled (name, value) pairs.
  std::vector<std::pair<std::string, double>> arg_sup;
  double refinement_delta = std::numeric_limits<double>::quiet_NaN();
  std::size_t cells_total = 0;
  std::size_t cells_failed = 0;
  double ceiling = std::numeric_limits<double>::infinity();
  bool pass = false;
  std::vector<std::string> notes;
  // Per-cell table; populated by grid sweeps, left empty by scalar checks.
  std::vector<SweepCell> cells;

  static constexpr double kRefinementTol = 0.05;
  static constexpr double kFailedCellFrac = 1e-3;

  // Recomputes `pass` from the recorded fields.
  void finalize() {
    const bool finite = std::isfinite(sup_ratio);
    const bool under_ceiling = finite && sup_ratio <= ceiling;
    const bool stable =
        std::isnan(refinement_delta) || refinement_delta <= kRefinementTol;
    const bool cells_ok =
        cells_total == 0 ||
        static_cast<double>(cells_failed) <=
            kFailedCellFrac * static_cast<double>(cells_total);
    pass = finite && under_ceiling && stable && cells_ok;
  }
};

}  // namespace hypwave
