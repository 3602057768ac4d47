#pragma once

#include <complex>
#include <vector>

#include "hypwave/report.hpp"

namespace hypwave {

using Complex = std::complex<double>;

// Gamma function for complex arguments (Lanczos approximation with reflection
// for Re z < 0.5).  Relative accuracy better than 1e-12 for |z| <= 50.
// Throws PoleError when z lies within 1e-12 of a nonpositive integer.
Complex gamma(Complex z);

// Entire reciprocal 1/Gamma.  Returns exactly 0 at nonpositive integers and
// agrees with 1.0 / gamma(z) elsewhere.
Complex recip_gamma(Complex z);

// C(x) = (1/2) * sum_{k>=0} 1/(k+x)^2 (half the trigamma function), truncated
// at 1e4 terms with an Euler-Maclaurin midpoint tail.  Defined for x not a
// nonpositive integer.
double trigamma_half(double x);

// Rectangular grid for the inequality checks below.  Steps halve when
// refine() is applied.
struct GammaGridSpec {
  double x_min = -6.0, x_max = 6.0, x_step = 0.25;
  double y_min = -20.0, y_max = 20.0, y_step = 0.25;
  // Points closer than this to a nonpositive integer are skipped where the
  // inequality requires a non-pole real part.
  double pole_margin = 1e-6;

  GammaGridSpec refined() const {
    GammaGridSpec g = *this;
    g.x_step *= 0.5;
    g.y_step *= 0.5;
    return g;
  }
};

// Sweeps the modulus/growth inequalities for Gamma and 1/Gamma over the grid:
//   gamma.recurrence              Gamma(z+1) = z Gamma(z)          (relative)
//   gamma.modulus_monotone        |Gamma(x+iy)| <= |Gamma(x)|
//   gamma.recip_trigamma_envelope |1/Gamma(x+iy)| <= |1/Gamma(x)| e^{C(x) y^2}
//   gamma.recip_negint_product    |1/Gamma(-N+iy)| <= |iy|...|N+iy| e^{y^2}
//   gamma.recip_large_y           |1/Gamma(x+iy)| / (|y|^{1/2-x} e^{pi|y|/2}),
//                                 |y| >= 5 only (sup ratio recorded)
//   gamma.recip_exp_bound         |1/Gamma(x+iy)| / e^{pi |y|}  (sup ratio)
// The first four are violation checks (sup of signed violation, slack 1e-9);
// the last two record empirical sup ratios for regression ceilings.
std::vector<BoundReport> check_gamma_inequalities(
    const GammaGridSpec& grid = GammaGridSpec{});

}  // namespace hypwave
