#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypwave/report.hpp"

namespace hypwave {

// Sweep grid for the dispersive-decay verification. Sequences are strictly
// increasing; diagonal probes t = r (1 +- 1e-2) are added per r at sweep
// time on top of t_points.
struct GridSpec {
  std::vector<double> r_points;
  std::vector<double> t_points;  // > 0
  std::vector<double> s_points;
  int refinement_level = 0;

  static GridSpec dispersive_default();
  // One doubling step: geometric midpoints inserted between consecutive
  // r and t points, originals kept. The s list stays fixed: the
  // dependence on s is entire with Gaussian decay, so extra s columns
  // probe nothing the r/t refinement does not.
  GridSpec refined() const;
};

// Default spectral shift satisfying the hypothesis: rho for n = 3,
// rho + 1/2 otherwise.
double default_beta(int n);

// Sup over the grid of |kernel|*(sinh t)^rho for both kinds, with per-cell
// records. with_refinement re-runs on grid.refined() to fill
// refinement_delta (cells of the refined pass are not stored). workers = 0
// means hardware concurrency; any worker count gives identical results.
BoundReport sweep_dispersive(int n, double beta, const GridSpec& grid,
                             bool with_refinement = true, int workers = 0);

// C_hat = sup_ratio * 1.1 and a note recording grid resolution and the
// arg-sup location. StaleReportError if refinement_delta > 0.05.
std::pair<double, std::string> estimate_constant(const BoundReport& report);

struct SuiteConfig {
  std::vector<std::string> suites;  // run in canonical order; empty = none
  std::vector<int> dimensions = {2, 3, 4, 5};
  std::map<int, double> beta_overrides;
  GridSpec grid = GridSpec::dispersive_default();
  std::map<std::string, double> ceilings;  // bound_id -> regression ceiling
  int workers = 0;
};

// Canonical suite names in execution order: "gamma", "bessel", "potential",
// "series", "expdecay", "multiplier", "dispersive".
const std::vector<std::string>& suite_names();

// Executes the selected suites in canonical order and returns one
// BoundReport per bound, ceilings applied where configured.
std::vector<BoundReport> run_all(const SuiteConfig& config);

// Line-oriented baseline table: header "# hypwave-baseline v1", then
// "bound_id ceiling" pairs. Load throws DomainError on malformed input.
std::map<std::string, double> load_baseline(const std::string& path);
void save_baseline(const std::string& path,
                   const std::vector<BoundReport>& reports,
                   double safety_factor = 1.1);

}  // namespace hypwave
