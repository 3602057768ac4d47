#pragma once

#include <complex>
#include <vector>

#include "hypwave/bessel.hpp"
#include "hypwave/report.hpp"

namespace hypwave {

// Parameters of the Bessel potential F_z(x), the one-dimensional Fourier
// transform of (1 + eta^2)^{z/2}:
//   F_z(x) = c_z |x|^{-(1+z)/2} K_{(1+z)/2}(|x|),
//   c_z    = 2 sqrt(pi) 2^{(1+z)/2} / Gamma(-z/2).
struct PotentialParam {
  Complex z;
  Complex nu;         // (1 + z) / 2, order of the K factor
  Complex nu_series;  // (-1 - z) / 2 = -nu, order used by the series split
  Complex c_z;

  explicit PotentialParam(Complex z_in);
};

// Coefficients of the small-argument series split
//   F_z(x) = c_z * pi/(2 sin(nu pi)) * [g(x^2) + x^{2 nu} h(x^2)],
//   g(y) = sum d1_j y^j,  h(y) = -sum d2_j y^j,
//   d1_j = 2^{nu - 2j} / (j! Gamma(j + 1 - nu)),
//   d2_j = 2^{-nu - 2j} / (j! Gamma(j + 1 + nu)),
// with nu = nu_series.
struct SeriesCoeffs {
  std::vector<Complex> d1, d2;
  Complex nu;
  static SeriesCoeffs build(Complex nu, int order);
};

struct SeriesSplit {
  Complex g_part, h_part, total;
};

// F_z(x); even in x, hard DomainError at x = 0.
Complex f_z(const PotentialParam& p, double x);

// Oracle route: direct oscillatory quadrature of the defining integral
// 2 Int_0^inf (1 + eta^2)^{Re z/2 + i Im z/2} cos(|x| eta) deta.
// Requires Re z <= -1.5; absolute error <= 1e-6.
Complex f_z_quadrature(const PotentialParam& p, double x);

// j-th derivative via the exact recursion F_z'(x) = x F_{z+2}(x) / (z + 2)
// expanded with product-rule bookkeeping; j = 0 delegates to f_z.
// Odd derivatives are odd in x, even ones even.
Complex f_z_deriv(const PotentialParam& p, double x, int j);

// All derivatives 0..max_j at once, sharing the shifted-parameter
// evaluations F_{z+2m}(x) across orders.
std::vector<Complex> f_z_derivs(const PotentialParam& p, double x, int max_j);

// Both analytic pieces of the series split and their combination,
// for 0 < |x| <= 1 and nu_series off-integer by >= 1e-6.
SeriesSplit f_z_series(const PotentialParam& p, double x,
                       const SeriesCoeffs& coeffs);

// Worst-case bound for the p-th derivative of the analytic series pieces
// when recombined with arbitrary coefficients |C_j| <= c_growth^j:
// reports sup over r_grid of the absolute-sum majorant divided by
// e^{pi |Im nu|}, for g and h separately (max of the two).
BoundReport series_gh_derivative_bound(BesselOrder nu, int p, double c_growth,
                                       const std::vector<double>& r_grid);

// Fourier transform of the homogeneous symbol |eta|^{-k+is} on the half
// line written in closed form:
//   2^{-k+is} sqrt(pi) Gamma((-k+1+is)/2) / Gamma((k-is)/2) |lambda|^{k-1-is}.
Complex riesz(int k, double s, double lambda);

// Decay-envelope sweep for |F_z^{(j)}|: small-x cases
//   x^{-Re z - j - 1}                        if j > -Re z - 1,
//   (min(1/|Im z|, ln 1/x)) + 1              if j = -Re z - 1, j even,
//   1                                        otherwise,
// and x^{-Re z/2 - 1} e^{-x} for x >= 1, all times e^{2 pi |Im z|}.
// Reports the sup ratio over the grid (split at x = 1).
BoundReport check_potential_decay(const PotentialParam& p, int j,
                                  const std::vector<double>& x_grid);

// Exponential-decay sweep: sup over (lambda, s) of
//   |s e^{-s^2} F_{-k+is}^{(m)}(beta lambda)| e^{k |lambda|}
// for k <= 3, m <= k - 1, beta >= k (k <= 2) or beta > k (k = 3).
// For m = k - 1 the report also runs the small-lambda smoothness probe
// that subtracts the full-line homogeneous transform (2 * riesz) before
// differencing toward lambda -> 0.
BoundReport check_exponential_decay(int k, double beta, int m,
                                    const std::vector<double>& lambda_grid,
                                    const std::vector<double>& s_grid);

}  // namespace hypwave
