#include "hypwave/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "hypwave/errors.hpp"
#include "hypwave/gamma.hpp"
#include "hypwave/quadrature.hpp"

namespace hypwave {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double dist_to_integer(BesselOrder nu) {
  return std::hypot(nu.mu - std::round(nu.mu), nu.s_part);
}

// Large-argument expansion K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum_m t_m with
// t_0 = 1, t_m = t_{m-1} (4 nu^2 - (2m-1)^2)/(8 x m). Asymptotic, not
// convergent: usable only while terms decrease; returns nothing when the
// smallest term fails the accuracy target.
std::optional<Complex> k_asymptotic(BesselOrder nu, double x) {
  const Complex mu4 = 4.0 * nu.value() * nu.value();
  Complex term{1.0, 0.0};
  Complex sum = term;
  double prev_mag = 1.0;
  double min_rel = 1.0;
  for (int m = 1; m <= 60; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= (mu4 - odd * odd) / (8.0 * x * m);
    const double mag = std::abs(term);
    if (mag >= prev_mag) break;  // divergent tail reached
    sum += term;
    prev_mag = mag;
    min_rel = mag / std::max(std::abs(sum), 1e-300);
    if (min_rel <= 1e-17) break;
  }
  if (min_rel > 1e-11) return std::nullopt;
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

}  // namespace

Complex k_integral(BesselOrder nu, double x) {
  if (nu.mu <= -0.5) {
    throw DomainError("k_integral: requires Re nu > -1/2");
  }
  if (!(x > 0.0)) {
    throw DomainError("k_integral: requires x > 0");
  }
  const Complex nuv = nu.value();
  const Complex expo = nuv - 0.5;  // power of (tau + tau^2/2)
  auto integrand = [&](double tau) -> Complex {
    // exp(-x tau) * (tau + tau^2/2)^(nu - 1/2), assembled in log form so
    // the huge-tau nodes underflow cleanly instead of hitting 0 * inf.
    const double l = std::log(tau * (1.0 + 0.5 * tau));
    return std::exp(Complex(-x * tau, 0.0) + expo * l);
  };
  const QuadResult head = tanh_sinh(integrand, 0.0, 1.0, 1e-300, 1e-11);
  const QuadResult tail = exp_sinh(integrand, 1.0, 1e-300, 1e-11);
  if (!head.converged || !tail.converged) {
    throw ConvergenceError("k_integral: quadrature did not converge");
  }
  const Complex integral = head.value + tail.value;
  const Complex pref = std::sqrt(0.5 * kPi) *
                       std::exp(nuv * std::log(x) - x) *
                       recip_gamma(nuv + 0.5);
  const Complex value = pref * integral;
  const double err = std::abs(pref) * (head.err_est + tail.err_est);
  if (err > 1e-9 * (1.0 + std::abs(value))) {
    throw ConvergenceError("k_integral: error estimate above tolerance");
  }
  return value;
}

Complex k_series(BesselOrder nu, double x) {
  if (dist_to_integer(nu) < 1e-6) {
    throw DomainError("k_series: nu within 1e-6 of an integer");
  }
  if (!(x > 0.0) || x > 10.0) {
    throw DomainError("k_series: requires 0 < x <= 10");
  }
  const Complex nuv = nu.value();
  const double q = 0.25 * x * x;
  const Complex pow_plus = std::exp(nuv * std::log(0.5 * x));
  const Complex pow_minus = 1.0 / pow_plus;

  // I_{+nu} and I_{-nu} ascending series, term ratios updated in place:
  //   T_{j+1} = T_j * q / ((j+1)(nu + j + 1))        (and nu -> -nu).
  Complex tp = recip_gamma(nuv + 1.0);
  Complex tm = recip_gamma(-nuv + 1.0);
  Complex sp = tp;
  Complex sm = tm;
  const double ap = std::abs(pow_plus);
  const double am = std::abs(pow_minus);
  // 1-norm in the cutoff: within a factor sqrt(2) of the modulus, absorbed
  // by the threshold's slack.
  const auto n1 = [](Complex v) {
    return std::abs(v.real()) + std::abs(v.imag());
  };
  for (int j = 0; j < 200; ++j) {
    const double j1 = j + 1.0;
    tp *= q / (j1 * (nuv + j1));
    tm *= q / (j1 * (-nuv + j1));
    sp += tp;
    sm += tm;
    const double scale = n1(sm) * am + n1(sp) * ap;
    if (n1(tp) * ap <= 1e-18 * scale && n1(tm) * am <= 1e-18 * scale) {
      break;
    }
  }
  const Complex i_plus = pow_plus * sp;
  const Complex i_minus = pow_minus * sm;
  return 0.5 * kPi / std::sin(nuv * kPi) * (i_minus - i_plus);
}

Complex k_eval(BesselOrder nu, double x) {
  if (std::abs(nu.mu) > 10.0 || std::abs(nu.s_part) > 40.0) {
    throw DomainError("k_eval: order outside supported box");
  }
  if (!(x > 0.0)) {
    throw DomainError("k_eval: requires x > 0");
  }
  // K_nu = K_{-nu}: reduce to Re nu >= 0 so the integral route stays valid.
  BesselOrder n = nu;
  if (n.mu < 0.0) {
    n.mu = -n.mu;
    n.s_part = -n.s_part;
  }
  const double d = dist_to_integer(n);
  const double nu_sq = n.mu * n.mu + n.s_part * n.s_part;
  const double asym_from = std::max(7.0, 0.35 * nu_sq);
  if (x >= asym_from) {
    if (auto v = k_asymptotic(n, x)) return *v;
    return k_integral(n, x);
  }
  if (x <= 2.0 ? d >= 1e-6 : (x <= 7.0 && d >= 1e-3)) {
    return k_series(n, x);
  }
  return k_integral(n, x);
}

double k_envelope(BesselOrder nu, double x) {
  if (!(x > 0.0)) {
    throw DomainError("k_envelope: requires x > 0");
  }
  const double abs_s = std::abs(nu.s_part);
  const double abs_mu = std::abs(nu.mu);
  const double large = std::exp(-x) / std::sqrt(x);
  double env;
  if (x >= 1.1) {
    env = large;
  } else {
    const double log_term = std::log(1.0 / x);
    const double middle =
        (abs_s > 0.0 ? std::min(1.0 / abs_s, log_term) : log_term) + 1.0;
    const double third = std::pow(x, -abs_mu);
    // Case boundary in Re nu: blend by max within |Re nu| <= 0.1.
    double small_env = (abs_mu <= 0.1) ? std::max(middle, third) : third;
    // Case boundary in x: blend by max within [0.9, 1.1].
    env = (x >= 0.9) ? std::max(large, small_env) : small_env;
  }
  return std::exp(kPi * abs_s) * env;
}

}  // namespace hypwave
