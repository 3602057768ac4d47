#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hypwave/errors.hpp"
#include "hypwave/gamma.hpp"
#include "testutil.hpp"

using hypwave::Complex;
using testutil::rel_err;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Stirling's asymptotic series for log Gamma, usable once |z| is large and
// Re z > 0.  Independent of the Lanczos path used by the library.
Complex stirling_log_gamma(Complex z) {
  // B_{2n} for n = 1..10.
  static const double bern[] = {1.0 / 6.0,       -1.0 / 30.0,    1.0 / 42.0,
                                -1.0 / 30.0,     5.0 / 66.0,     -691.0 / 2730.0,
                                7.0 / 6.0,       -3617.0 / 510.0, 43867.0 / 798.0,
                                -174611.0 / 330.0};
  Complex sum = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  Complex zpow = z;
  const Complex z2 = z * z;
  for (int n = 1; n <= 10; ++n) {
    sum += bern[n - 1] / (2.0 * n * (2.0 * n - 1.0) * zpow);
    zpow *= z2;
  }
  return sum;
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("reference values") {
  struct Ref {
    Complex z;
    Complex want;
  };
  const Ref table[] = {
      {{1.0, 1.0}, {0.498015668118356042714, -0.154949828301810685125}},
      {{3.0, 4.0}, {0.00522553847136921419473, -0.172547079294300187719}},
      {{-2.3, 0.4}, {-0.377763330734976122149, -0.549515506074271044902}},
      {{0.5, 10.0}, {3.37872437623423579703e-7, 1.68936983903891891121e-7}},
      {{-5.5, 0.0}, {0.0109126547819098629867, 0.0}},
      {{0.5, 0.0}, {1.77245385090551602730, 0.0}},   // sqrt(pi)
      {{6.0, 0.0}, {120.0, 0.0}},
      {{-0.5, 0.0}, {-3.54490770181103205460, 0.0}}, // -2 sqrt(pi)
  };
  for (const Ref& ref : table) {
    CAPTURE(ref.z.real());
    CAPTURE(ref.z.imag());
    CHECK(rel_err(hypwave::gamma(ref.z), ref.want) < 1e-12);
  }
}

TEST_CASE("recurrence and conjugation") {
  const Complex points[] = {{0.3, 0.7}, {-1.4, 2.0}, {4.5, -3.0},
                            {-5.2, -0.1}, {0.01, 10.0}};
  for (Complex z : points) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(rel_err(z * hypwave::gamma(z), hypwave::gamma(z + 1.0)) < 1e-12);
    CHECK(rel_err(hypwave::gamma(std::conj(z)),
                  std::conj(hypwave::gamma(z))) < 1e-13);
  }
}

TEST_CASE("Stirling series oracle") {
  const Complex points[] = {{10.0, 3.0}, {12.0, -5.0}, {20.0, 0.0},
                            {15.0, 15.0}};
  for (Complex z : points) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    const Complex want = std::exp(stirling_log_gamma(z));
    CHECK(rel_err(hypwave::gamma(z), want) < 1e-12);
  }
}

TEST_CASE("poles and the reciprocal") {
  CHECK_THROWS_AS(hypwave::gamma({0.0, 0.0}), hypwave::PoleError);
  CHECK_THROWS_AS(hypwave::gamma({-1.0, 0.0}), hypwave::PoleError);
  CHECK_THROWS_AS(hypwave::gamma({-7.0, 0.0}), hypwave::PoleError);
  CHECK_THROWS_AS(hypwave::gamma({-3.0 + 5e-13, 0.0}), hypwave::PoleError);
  CHECK_NOTHROW(hypwave::gamma({-3.001, 0.0}));

  // 1/Gamma is entire: exactly zero at the poles, reciprocal elsewhere.
  CHECK(hypwave::recip_gamma({0.0, 0.0}) == Complex{0.0, 0.0});
  CHECK(hypwave::recip_gamma({-6.0, 0.0}) == Complex{0.0, 0.0});
  const Complex points[] = {{2.5, 1.0}, {-0.5, 0.0}, {-4.3, 2.2}, {1.0, -8.0}};
  for (Complex z : points) {
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(rel_err(hypwave::recip_gamma(z) * hypwave::gamma(z),
                  Complex{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("trigamma half-sum") {
  struct Ref {
    double x;
    double want;
  };
  const Ref table[] = {
      {0.5, 2.46740110027233965471},   // pi^2/4
      {1.0, 0.822467033424113218236},  // pi^2/12
      {-2.5, 4.76962332249456187693},
      {3.25, 0.179899145154789937537},
  };
  for (const Ref& ref : table) {
    CAPTURE(ref.x);
    CHECK(rel_err(hypwave::trigamma_half(ref.x), ref.want) < 1e-10);
  }
}

TEST_CASE("inequality sweep passes on the default grid") {
  const std::vector<hypwave::BoundReport> reports =
      hypwave::check_gamma_inequalities(hypwave::GammaGridSpec{});
  REQUIRE(reports.size() == 6);
  const char* want_ids[] = {
      "gamma.recurrence",          "gamma.modulus_monotone",
      "gamma.recip_trigamma_envelope", "gamma.recip_negint_product",
      "gamma.recip_large_y",       "gamma.recip_exp_bound",
  };
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].bound_id);
    CHECK(reports[i].bound_id == want_ids[i]);
    CHECK(reports[i].pass);
    CHECK(std::isfinite(reports[i].sup_ratio));
  }
}

}  // TEST_SUITE
