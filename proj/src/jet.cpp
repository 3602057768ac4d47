#include "hypwave/jet.hpp"

#include <algorithm>
#include <cmath>

#include "hypwave/errors.hpp"

namespace hypwave {

Jet::Jet(double center, std::vector<Complex> coeffs)
    : center_(center), c_(std::move(coeffs)) {
  if (c_.empty()) {
    throw DomainError("Jet: empty coefficient list");
  }
}

Jet Jet::constant(double center, Complex v, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
  c[0] = v;
  return Jet(center, std::move(c));
}

Jet Jet::variable(double center, int order) {
  Jet j = constant(center, Complex(center, 0.0), order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::from_derivatives(double center, const std::vector<Complex>& derivs) {
  std::vector<Complex> c(derivs.size());
  double fact = 1.0;
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    if (i > 0) fact *= static_cast<double>(i);
    c[i] = derivs[i] / fact;
  }
  return Jet(center, std::move(c));
}

Complex Jet::coeff(int i) const {
  if (i < 0 || i > order()) {
    throw DomainError("Jet::coeff: index outside stored order");
  }
  return c_[static_cast<std::size_t>(i)];
}

Jet Jet::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw DomainError("Jet::truncated: order not available");
  }
  return Jet(center_, {c_.begin(), c_.begin() + new_order + 1});
}

Jet Jet::derivative() const {
  if (order() < 1) {
    throw DomainError("Jet::derivative: order 0 holds no derivative");
  }
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = static_cast<double>(i + 1) * c_[i + 1];
  }
  return Jet(center_, std::move(d));
}

namespace {

void require_same_center(const Jet& a, const Jet& b) {
  if (a.center() != b.center()) {
    throw DomainError("Jet arithmetic: centers differ");
  }
}

}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
  return Jet(a.center_, std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
  return Jet(a.center_, std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{});
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n && j <= b.order(); ++j) {
      if (i <= a.order()) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Jet(a.center_, std::move(c));
}

Jet operator*(Complex s, const Jet& a) {
  std::vector<Complex> c(a.c_);
  for (auto& v : c) v *= s;
  return Jet(a.center_, std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_center(a, b);
  // Strip a common run of exactly-zero leading coefficients (the removable
  // part of f/g when both vanish at the center, e.g. odd/odd jets at 0).
  int shift = 0;
  while (shift <= a.order() && shift <= b.order() &&
         a.c_[shift] == Complex{} && b.c_[shift] == Complex{}) {
    ++shift;
  }
  if (shift > b.order() || b.c_[shift] == Complex{}) {
    throw DomainError("Jet division: denominator vanishes at the center");
  }
  const int n = std::min(a.order(), b.order()) - shift;
  if (n < 0) {
    throw DomainError("Jet division: no orders left after cancellation");
  }
  std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
  const Complex b0 = b.c_[shift];
  for (int i = 0; i <= n; ++i) {
    Complex acc = (shift + i <= a.order()) ? a.c_[shift + i] : Complex{};
    for (int m = 1; m <= i; ++m) {
      acc -= b.c_[shift + m] * q[i - m];
    }
    q[i] = acc / b0;
  }
  return Jet(a.center_, std::move(q));
}

Jet compose(const std::vector<Complex>& outer, const Jet& g) {
  if (outer.empty()) {
    throw DomainError("compose: empty outer coefficient list");
  }
  // delta = g - g(center); Horner in jet arithmetic.
  Jet delta = g - Jet::constant(g.center(), g.value(), g.order());
  Jet res = Jet::constant(g.center(), outer.back(), g.order());
  for (auto it = outer.rbegin() + 1; it != outer.rend(); ++it) {
    res = res * delta + Jet::constant(g.center(), *it, g.order());
  }
  return res;
}

Jet sinh_jet(double center, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  const double sh = std::sinh(center);
  const double ch = std::cosh(center);
  double fact = 1.0;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) fact *= i;
    c[i] = Complex((i % 2 == 0 ? sh : ch) / fact, 0.0);
  }
  return Jet(center, std::move(c));
}

Jet cosh_jet(double center, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  const double sh = std::sinh(center);
  const double ch = std::cosh(center);
  double fact = 1.0;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) fact *= i;
    c[i] = Complex((i % 2 == 0 ? ch : sh) / fact, 0.0);
  }
  return Jet(center, std::move(c));
}

Jet exp_jet(const Jet& g) {
  std::vector<Complex> outer(static_cast<std::size_t>(g.order()) + 1);
  outer[0] = std::exp(g.value());
  for (int m = 1; m <= g.order(); ++m) {
    outer[m] = outer[m - 1] / static_cast<double>(m);
  }
  return compose(outer, g);
}

Jet log_jet(const Jet& g) {
  const Complex g0 = g.value();
  if (g0 == Complex{}) {
    throw DomainError("log_jet: zero constant term");
  }
  std::vector<Complex> outer(static_cast<std::size_t>(g.order()) + 1);
  outer[0] = std::log(g0);
  Complex p{1.0, 0.0};  // (-1)^{m+1} / g0^m accumulator (without 1/m)
  for (int m = 1; m <= g.order(); ++m) {
    p /= -g0;
    outer[m] = -p / static_cast<double>(m);
  }
  return compose(outer, g);
}

Jet pow_jet(const Jet& g, Complex a) {
  const Complex g0 = g.value();
  if (g0 == Complex{}) {
    throw DomainError("pow_jet: zero constant term");
  }
  // outer_m = binom(a, m) g0^{a-m}: recurrence over m.
  std::vector<Complex> outer(static_cast<std::size_t>(g.order()) + 1);
  outer[0] = std::exp(a * std::log(g0));
  for (int m = 1; m <= g.order(); ++m) {
    outer[m] = outer[m - 1] * (a - static_cast<double>(m - 1)) /
               (static_cast<double>(m) * g0);
  }
  return compose(outer, g);
}

Jet tau_derivative(const Jet& f, const Jet& sinh_u) {
  return f.derivative() / sinh_u;
}

}  // namespace hypwave
