#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypwave/errors.hpp"
#include "hypwave/potential.hpp"
#include "testutil.hpp"

using hypwave::Complex;
using hypwave::PotentialParam;
using testutil::rel_err;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g.push_back(lo * std::exp(step * i));
  return g;
}

}  // namespace

TEST_SUITE("potential") {

TEST_CASE("closed form at z = -2 is pi e^{-|x|}") {
  const PotentialParam p{{-2.0, 0.0}};
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    CAPTURE(x);
    const Complex want{kPi * std::exp(-std::abs(x)), 0.0};
    CHECK(rel_err(hypwave::f_z(p, x), want) < 1e-9);
    CHECK(rel_err(hypwave::f_z(p, -x), want) < 1e-9);  // even in x
  }
  CHECK_THROWS_AS(hypwave::f_z(p, 0.0), hypwave::DomainError);
}

TEST_CASE("reference value at complex z") {
  const PotentialParam p{{-3.0, 2.0}};
  const Complex want{1.4561364309668969624, 0.37925151339292145599};
  CHECK(rel_err(hypwave::f_z(p, 0.7), want) < 1e-11);
  CHECK(rel_err(hypwave::f_z(p, -0.7), want) < 1e-11);
}

TEST_CASE("agrees with the defining oscillatory integral") {
  const Complex zs[] = {{-2.0, 0.0}, {-1.7, 1.0}, {-3.2, -2.0}, {-2.5, 4.0}};
  for (Complex z : zs) {
    const PotentialParam p{z};
    for (double x : {0.3, 1.0, 3.0}) {
      CAPTURE(z.real());
      CAPTURE(z.imag());
      CAPTURE(x);
      const Complex a = hypwave::f_z(p, x);
      const Complex b = hypwave::f_z_quadrature(p, x);
      CHECK(std::abs(a - b) < 2e-6);
    }
  }
  CHECK_THROWS_AS(hypwave::f_z_quadrature(PotentialParam{{-1.2, 0.0}}, 1.0),
                  hypwave::DomainError);
}

TEST_CASE("derivatives: delegation, parity, and the shift identity") {
  const PotentialParam p{{-2.5, 1.5}};
  for (double x : {0.3, 0.8, 2.0}) {
    CAPTURE(x);
    CHECK(hypwave::f_z_deriv(p, x, 0) == hypwave::f_z(p, x));
    // F'_z(x) = x F_{z+2}(x) / (z + 2), the recursion's base identity.
    const PotentialParam shifted{p.z + 2.0};
    const Complex want = x * hypwave::f_z(shifted, x) / (p.z + 2.0);
    CHECK(rel_err(hypwave::f_z_deriv(p, x, 1), want) < 1e-10);
    // Odd orders are odd in x, even orders even.
    CHECK(hypwave::f_z_deriv(p, -x, 1) == -hypwave::f_z_deriv(p, x, 1));
    CHECK(hypwave::f_z_deriv(p, -x, 2) == hypwave::f_z_deriv(p, x, 2));
  }
  // The batch route matches the single-order route.
  const std::vector<Complex> all = hypwave::f_z_derivs(p, 0.8, 4);
  REQUIRE(all.size() == 5);
  for (int j = 0; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(rel_err(all[static_cast<std::size_t>(j)],
                  hypwave::f_z_deriv(p, 0.8, j)) < 1e-12);
  }
  // z = -2 puts z + 2 on the Gamma pole: first derivative must refuse.
  CHECK_THROWS_AS(hypwave::f_z_deriv(PotentialParam{{-2.0, 0.0}}, 1.0, 1),
                  hypwave::PoleError);
}

TEST_CASE("derivatives against Richardson finite differences") {
  const Complex zs[] = {{-2.0, 1.0}, {-3.0, 2.0}};
  for (Complex z : zs) {
    const PotentialParam p{z};
    for (double x : {0.3, 0.8, 2.0}) {
      for (int j : {1, 2, 3}) {
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CAPTURE(x);
        CAPTURE(j);
        // Central difference of order j at steps h and h/2, Richardson
        // combined to h^4; derivatives below stay well conditioned here.
        auto fd = [&](double h) {
          Complex acc{0.0, 0.0};
          // Binomial stencil for the j-th central difference.
          const int n = j;
          double sign = 1.0;
          double binom = 1.0;
          for (int i = 0; i <= n; ++i) {
            const double xx = x + (0.5 * n - i) * h;
            acc += sign * binom * hypwave::f_z(p, xx);
            sign = -sign;
            binom = binom * (n - i) / (i + 1.0);
          }
          return acc / std::pow(h, j);
        };
        const Complex d1 = fd(1e-2);
        const Complex d2 = fd(5e-3);
        const Complex extrap = d2 + (d2 - d1) / 3.0;  // h^2 error model
        CHECK(rel_err(hypwave::f_z_deriv(p, x, j), extrap) < 1e-5);
      }
    }
  }
}

TEST_CASE("series split matches the closed form and is even in x") {
  const PotentialParam p{{-2.5, 1.0}};
  const hypwave::SeriesCoeffs coeffs =
      hypwave::SeriesCoeffs::build(p.nu_series, 40);
  for (double x : {0.05, 0.3, 0.9}) {
    CAPTURE(x);
    const hypwave::SeriesSplit split = hypwave::f_z_series(p, x, coeffs);
    CHECK(rel_err(split.total, hypwave::f_z(p, x)) < 1e-9);
    const hypwave::SeriesSplit neg = hypwave::f_z_series(p, -x, coeffs);
    // g is a function of x^2 only: bit-identical under x -> -x.
    CHECK(neg.g_part == split.g_part);
  }
  CHECK_THROWS_AS(hypwave::f_z_series(p, 1.5, coeffs), hypwave::DomainError);
  // Near-integer series order is rejected at coefficient build time.
  CHECK_THROWS_AS(hypwave::SeriesCoeffs::build({1.0, 1e-9}, 10),
                  hypwave::DomainError);
}

TEST_CASE("homogeneous half-line transform") {
  // Frozen reference for k=1, s=0.5, lambda=1.
  const Complex want{-0.528889223497429786, -2.1238625755564546};
  CHECK(rel_err(hypwave::riesz(1, 0.5, 1.0), want) < 1e-12);
  // Homogeneity: scaling lambda by 2 multiplies by 2^{k-1-is}.
  for (int k : {1, 2, 3}) {
    for (double s : {-1.0, 0.5, 2.0}) {
      CAPTURE(k);
      CAPTURE(s);
      const Complex ratio = hypwave::riesz(k, s, 2.0) / hypwave::riesz(k, s, 1.0);
      const Complex want_ratio =
          std::exp(Complex{static_cast<double>(k - 1), -s} * std::log(2.0));
      CHECK(rel_err(ratio, want_ratio) < 1e-12);
    }
  }
  CHECK_THROWS_AS(hypwave::riesz(0, 0.5, 1.0), hypwave::DomainError);
  CHECK_THROWS_AS(hypwave::riesz(1, 0.5, 0.0), hypwave::DomainError);
}

TEST_CASE("decay envelope sweep") {
  const std::vector<double> grid = log_grid(1e-3, 10.0, 40);
  const hypwave::BoundReport r =
      hypwave::check_potential_decay(PotentialParam{{-2.0, 1.0}}, 1, grid);
  CHECK(r.pass);
  CHECK(std::isfinite(r.sup_ratio));
  CHECK(r.bound_id == "potential.decay_z-2+1i_j1");
  // The envelope cases divide by |Im z|: purely real z is out of scope.
  CHECK_THROWS_AS(
      hypwave::check_potential_decay(PotentialParam{{-2.0, 0.0}}, 0, grid),
      hypwave::DomainError);
}

TEST_CASE("exponential decay sweep with the subtraction probe") {
  const std::vector<double> lambdas = log_grid(1e-3, 8.0, 25);
  const std::vector<double> esses = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  const hypwave::BoundReport r =
      hypwave::check_exponential_decay(1, 1.0, 0, lambdas, esses);
  CHECK(r.pass);
  CHECK(std::isfinite(r.sup_ratio));
  CHECK(r.bound_id == "potential.exp_decay_k1_m0");
  // m = k-1 runs the smoothness probe; its note reports zero failures.
  bool probe_note = false;
  for (const std::string& note : r.notes)
    probe_note = probe_note || note == "riesz_probe_failures=0";
  CHECK(probe_note);

  CHECK_THROWS_AS(
      hypwave::check_exponential_decay(4, 5.0, 0, lambdas, esses),
      hypwave::DomainError);
  CHECK_THROWS_AS(
      hypwave::check_exponential_decay(2, 1.5, 0, lambdas, esses),
      hypwave::DomainError);  // beta >= k required for k = 2
  CHECK_THROWS_AS(
      hypwave::check_exponential_decay(3, 3.0, 2, lambdas, esses),
      hypwave::DomainError);  // beta > 3 required for k = 3
  CHECK_THROWS_AS(
      hypwave::check_exponential_decay(2, 2.0, 2, lambdas, esses),
      hypwave::DomainError);  // m exceeds k - 1
}

}  // TEST_SUITE
