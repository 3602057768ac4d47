#pragma once

#include <complex>
#include <string>

namespace hypwave {

using Complex = std::complex<double>;

enum class Kind { sine, cosine };

// One radial kernel evaluation request on H^n. z = -rho + i s is the
// analytic-family parameter; beta the spectral shift, subject to
// beta >= rho (n = 3) or beta > rho (n != 3).
struct KernelQuery {
  int n = 3;
  double beta = 1.0;
  double t = 1.0;   // > 0
  double r = 0.0;   // >= 0
  double s = 1.0;   // Im z
  Kind kind = Kind::sine;

  int k() const { return n / 2; }
  double rho() const { return 0.5 * (n - 1); }
};

enum class EvalMethod { jet_closed_form, finite_difference, spectral_quadrature };

struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  EvalMethod method = EvalMethod::jet_closed_form;
};

// Throws DomainError unless the KernelQuery satisfies its invariants
// (dimension range, beta hypothesis, t > 0, r >= 0).
void validate_query(const KernelQuery& q);

// Odd dimension n = 2k+1: jets in u apply (1/sinh u d/du) k-1 times (sine)
// or k times (cosine) to the half-sum/half-difference of Bessel potentials
// at beta(t -+ u); prefactor s e^{-s^2}. Near r = t the evaluation shifts
// to r = t +- 1e-4 and keeps the larger modulus with inflated error.
EvalResult kernel_odd(const KernelQuery& q);

// Even dimension n = 2k: half-line integral over u >= r. The endpoint
// factor (cosh u - cosh r)^{-1/2} is evaluated cancellation-free from the
// exact distance to u = r; for t > r the range splits at u = t and the
// |t - u|^{-1/2} potential singularity is absorbed by u = t -+ w^2. The
// tail is truncated at u = r + 40 with a certified geometric estimate.
// Near r = t the evaluation shifts to r = t +- 1e-4 exactly like the odd
// case; within |t - r| <= 2e-3 * min(t, r) the error estimate additionally
// carries the measured cross-front spread (the value holds a bounded
// oscillatory layer there whose amplitude plain quadrature cannot see).
EvalResult kernel_even(const KernelQuery& q);

// Parity dispatcher.
EvalResult kernel_eval(const KernelQuery& q);

// Sup over a uniform lambda-grid (64 points per period of sin(t lambda),
// lambda in [0, lambda_max]) of the scalar spectral multiplier
//   |(z + rho) e^{z^2} (lambda^2 + beta^2)^{z/2} sin(t lambda)/lambda|
// for the sine kind (limit t at lambda = 0), and the cosine analogue with
// exponent (z-1)/2 and cos(t lambda). z = z_re + i s.
double l2_multiplier_sup(Kind kind, double z_re, double s, double t,
                         double beta, double rho, double lambda_max);

enum class DerivativeMode { none, apply_in_integrand };

// Independent oscillatory-quadrature route for the odd-dimensional spectral
// integrals; derivative_mode applies one d/dr inside the integrand (factor
// -i beta eta). Supported assemblies: (n=3, sine, none), (n=3, cosine,
// apply_in_integrand), (n=5, sine, apply_in_integrand); anything else is a
// DomainError.
EvalResult spectral_quadrature_oracle(const KernelQuery& q,
                                      DerivativeMode derivative_mode);

}  // namespace hypwave
