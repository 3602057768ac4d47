#pragma once

#include <complex>

namespace hypwave {

using Complex = std::complex<double>;

// Order nu = mu + i*s_part of the modified Bessel function of the second
// kind. Supported box: |mu| <= 10, |s_part| <= 40.
struct BesselOrder {
  double mu = 0.0;      // Re nu
  double s_part = 0.0;  // Im nu
  Complex value() const { return {mu, s_part}; }
};

// K_nu(x) from the real-integral representation
//   K_nu(x) = sqrt(pi/2) x^nu e^{-x} / Gamma(nu + 1/2)
//             * Int_0^inf e^{-x tau} (tau + tau^2/2)^{nu - 1/2} dtau,
// valid for Re nu > -1/2, x > 0. Absolute error <= 1e-9 * (1 + |K|) for
// x in [1e-3, 50], |nu| <= 10.
Complex k_integral(BesselOrder nu, double x);

// K_nu(x) from the reflection of the two ascending I-series,
//   K_nu = pi / (2 sin(nu pi)) * [I_{-nu} - I_nu],
// for nu off-integer and 0 < x <= 10.
Complex k_series(BesselOrder nu, double x);

// Dispatcher over the series, integral, and large-argument asymptotic
// routes; applies K_nu = K_{-nu} to reach Re nu >= 0 first. Mixed
// absolute-relative accuracy 1e-8.
Complex k_eval(BesselOrder nu, double x);

// Decay envelope for |K_nu(x)| without its implicit constant:
//   e^{pi |Im nu|} * { x^{-1/2} e^{-x}                  if x >= 1,
//                      min(1/|Im nu|, ln 1/x) + 1       if Re nu = 0, x < 1,
//                      x^{-|Re nu|}                     otherwise },
// blended by taking the max of adjacent cases within 10% of a case
// boundary (x within [0.9, 1.1], or |Re nu| <= 0.1 for x < 1).
double k_envelope(BesselOrder nu, double x);

}  // namespace hypwave
