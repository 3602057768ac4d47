#include <cmath>
#include <complex>

#include "doctest.h"
#include "hypwave/quadrature.hpp"
#include "testutil.hpp"

using hypwave::Complex;
using hypwave::QuadResult;
using testutil::rel_err;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("quadrature") {

TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
  QuadResult r = hypwave::tanh_sinh([](double x) { return Complex{std::sin(x), 0.0}; },
                                    0.0, kPi, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{2.0, 0.0}) < 1e-12);

  r = hypwave::tanh_sinh(
      [](double x) { return Complex{1.0 / std::sqrt(x), 0.0}; }, 0.0, 1.0,
      1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{2.0, 0.0}) < 1e-10);

  r = hypwave::tanh_sinh([](double x) { return Complex{-std::log(x), 0.0}; },
                         0.0, 1.0, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{1.0, 0.0}) < 1e-11);
}

TEST_CASE("distance-form nodes make both-endpoint singularities exact") {
  // int_0^1 x^{-1/2} (1-x)^{-1/2} dx = pi, with each factor evaluated from
  // the exact distance to its endpoint.
  QuadResult r = hypwave::tanh_sinh_ex(
      [](double, double da, double db) {
        return Complex{1.0 / (std::sqrt(da) * std::sqrt(db)), 0.0};
      },
      0.0, 1.0, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{kPi, 0.0}) < 1e-12);
}

TEST_CASE("mass hiding near an endpoint of a long interval") {
  // The center samples of [0, 40] see ~e^{-60}: a truncation rule keyed to
  // small terms alone would stop before the levels reach the left edge.
  QuadResult r = hypwave::tanh_sinh(
      [](double x) { return Complex{std::exp(-3.0 * x), 0.0}; }, 0.0, 40.0,
      1e-16);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{1.0 / 3.0, 0.0}) < 1e-9);

  // Same pattern on the opposite edge.
  r = hypwave::tanh_sinh(
      [](double x) { return Complex{std::exp(3.0 * (x - 40.0)), 0.0}; }, 0.0,
      40.0, 1e-16);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{1.0 / 3.0, 0.0}) < 1e-9);
}

TEST_CASE("exp-sinh on the half line") {
  QuadResult r = hypwave::exp_sinh(
      [](double x) { return Complex{std::exp(-x), 0.0}; }, 0.0, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{1.0, 0.0}) < 1e-12);

  r = hypwave::exp_sinh([](double x) { return Complex{1.0 / (x * x), 0.0}; },
                        1.0, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{1.0, 0.0}) < 1e-11);

  // Complex-valued decay: int_0^inf e^{-x} e^{ix} dx = (1+i)/2.
  r = hypwave::exp_sinh(
      [](double x) { return std::exp(Complex{-x, x}); }, 0.0, 1e-14);
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{0.5, 0.5}) < 1e-11);
}

TEST_CASE("Gauss-Kronrod panel exactness") {
  // The embedded 7-point Gauss rule is exact through degree 13, so the
  // panel's |K15 - G7| error estimate vanishes for such polynomials.
  QuadResult r = hypwave::gauss_kronrod_panel(
      [](double x) { return Complex{std::pow(x, 13.0), 0.0}; }, 0.0, 1.0);
  CHECK(rel_err(r.value, Complex{1.0 / 14.0, 0.0}) < 1e-14);
  CHECK(r.err_est < 1e-14);

  r = hypwave::gauss_kronrod_panel(
      [](double x) { return Complex{std::exp(x), 0.0}; }, 0.0, 1.0);
  CHECK(rel_err(r.value, Complex{std::exp(1.0) - 1.0, 0.0}) < 1e-14);
}

TEST_CASE("adaptive Gauss-Kronrod concentrates where needed") {
  // Oscillatory complex integrand: int_0^20 e^{5ix} dx.
  QuadResult r = hypwave::adaptive_gauss_kronrod(
      [](double x) { return std::exp(Complex{0.0, 5.0 * x}); }, 0.0, 20.0,
      1e-12);
  const Complex want = (std::exp(Complex{0.0, 100.0}) - 1.0) / Complex{0.0, 5.0};
  CHECK(r.converged);
  CHECK(rel_err(r.value, want) < 1e-10);

  // Sharp peak at an interior point.
  r = hypwave::adaptive_gauss_kronrod(
      [](double x) {
        return Complex{1.0 / std::sqrt(std::abs(x - 0.3) + 1e-8), 0.0};
      },
      0.0, 1.0, 1e-9);
  const double exact = 2.0 * (std::sqrt(0.3 + 1e-8) + std::sqrt(0.7 + 1e-8) -
                              2.0 * std::sqrt(1e-8));
  CHECK(r.converged);
  CHECK(rel_err(r.value, Complex{exact, 0.0}) < 1e-7);
}

TEST_CASE("non-convergence is reported, not hidden") {
  // Level cap 0 cannot satisfy the two-level agreement requirement.
  QuadResult r = hypwave::tanh_sinh(
      [](double x) { return Complex{std::exp(x), 0.0}; }, 0.0, 1.0, 1e-14,
      1e-13, 0);
  CHECK_FALSE(r.converged);
  CHECK(r.err_est > 0.0);
}

}  // TEST_SUITE
