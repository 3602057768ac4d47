#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hypwave/bessel.hpp"
#include "hypwave/errors.hpp"
#include "testutil.hpp"

using hypwave::BesselOrder;
using hypwave::Complex;
using testutil::rel_err;

namespace {

constexpr double kPi = 3.14159265358979323846;

// K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}; K_{3/2}(x) = K_{1/2}(x) (1 + 1/x).
double k_half(double x) { return std::sqrt(kPi / (2.0 * x)) * std::exp(-x); }

}  // namespace

TEST_SUITE("bessel") {

TEST_CASE("half-integer closed forms") {
  for (double x : {0.05, 0.5, 1.0, 2.0, 7.0, 30.0}) {
    CAPTURE(x);
    const Complex got = hypwave::k_eval({0.5, 0.0}, x);
    CHECK(rel_err(got, Complex{k_half(x), 0.0}) < 1e-10);
    const Complex got32 = hypwave::k_eval({1.5, 0.0}, x);
    CHECK(rel_err(got32, Complex{k_half(x) * (1.0 + 1.0 / x), 0.0}) < 1e-10);
  }
  CHECK(rel_err(hypwave::k_eval({0.5, 0.0}, 2.0),
                Complex{0.119937771968061447368, 0.0}) < 1e-12);
}

TEST_CASE("reference values at complex order") {
  struct Ref {
    BesselOrder nu;
    double x;
    Complex want;
  };
  const Ref table[] = {
      {{0.0, 2.0}, 1.0, {0.0806169976223659785698, 0.0}},
      {{1.0, 3.0}, 0.5, {0.0387104796866410508717, -0.0681751845148792171923}},
      {{0.25, -1.0}, 0.1, {0.0736897857909238270555, -0.491035107661925848701}},
      {{1.75, 3.0}, 2.0, {-0.0302586758919860750193, 0.0292859581493373801759}},
      {{0.0, 1.0}, 0.01, {-0.500633716827484548208, 0.0}},
  };
  for (const Ref& ref : table) {
    CAPTURE(ref.nu.mu);
    CAPTURE(ref.nu.s_part);
    CAPTURE(ref.x);
    CHECK(rel_err(hypwave::k_eval(ref.nu, ref.x), ref.want) < 1e-8);
  }
  // Purely imaginary order and real argument give a real K.
  CHECK(std::abs(hypwave::k_eval({0.0, 2.0}, 1.0).imag()) < 1e-10);
}

TEST_CASE("integral and series routes agree") {
  const BesselOrder orders[] = {{0.3, 0.0}, {0.5, 1.0}, {1.25, -2.0},
                                {2.75, 3.0}, {0.1, 0.4}};
  for (const BesselOrder& nu : orders) {
    for (double x : {0.1, 0.7, 2.0, 6.0}) {
      CAPTURE(nu.mu);
      CAPTURE(nu.s_part);
      CAPTURE(x);
      const Complex a = hypwave::k_integral(nu, x);
      const Complex b = hypwave::k_series(nu, x);
      CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("order reflection symmetry") {
  const BesselOrder orders[] = {{1.0, 1.0}, {0.5, -3.0}, {2.25, 0.7}};
  for (const BesselOrder& nu : orders) {
    for (double x : {0.05, 0.9, 4.0, 20.0}) {
      CAPTURE(nu.mu);
      CAPTURE(nu.s_part);
      CAPTURE(x);
      const Complex a = hypwave::k_eval(nu, x);
      const Complex b = hypwave::k_eval({-nu.mu, -nu.s_part}, x);
      CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("continuity in the order near a half integer") {
  for (double x : {0.2, 1.0, 5.0}) {
    CAPTURE(x);
    const Complex a = hypwave::k_integral({0.5, 0.0}, x);
    const Complex b = hypwave::k_integral({0.5, 1e-12}, x);
    CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("decay envelope majorizes sampled moduli") {
  const BesselOrder orders[] = {{0.0, 0.5}, {0.0, 3.0}, {1.0, 1.0},
                                {-2.5, 4.0}, {0.05, 2.0}};
  for (const BesselOrder& nu : orders) {
    for (double x : {0.002, 0.05, 0.5, 1.0, 3.0, 15.0, 40.0}) {
      CAPTURE(nu.mu);
      CAPTURE(nu.s_part);
      CAPTURE(x);
      const double mod = std::abs(hypwave::k_eval(nu, x));
      const double env = hypwave::k_envelope(nu, x);
      CHECK(std::isfinite(env));
      // The envelope carries no constant; a single uniform factor must cover
      // the sampled box, and 50 is far above anything observed.
      CHECK(mod <= 50.0 * env);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hypwave::k_eval({11.0, 0.0}, 1.0), hypwave::DomainError);
  CHECK_THROWS_AS(hypwave::k_eval({0.0, 45.0}, 1.0), hypwave::DomainError);
  CHECK_THROWS_AS(hypwave::k_eval({1.0, 0.0}, 0.0), hypwave::DomainError);
  CHECK_THROWS_AS(hypwave::k_eval({1.0, 0.0}, -2.0), hypwave::DomainError);
  // The series route rejects integer orders (reflection formula pole) and
  // arguments beyond its radius of usefulness.
  CHECK_THROWS_AS(hypwave::k_series({1.0, 0.0}, 1.0), hypwave::DomainError);
  CHECK_THROWS_AS(hypwave::k_series({0.3, 0.0}, 11.0), hypwave::DomainError);
  // The integral route requires Re nu > -1/2.
  CHECK_THROWS_AS(hypwave::k_integral({-0.75, 0.0}, 1.0), hypwave::DomainError);
}

}  // TEST_SUITE
