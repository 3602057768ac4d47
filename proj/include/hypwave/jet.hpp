#pragma once

#include <complex>
#include <vector>

namespace hypwave {

using Complex = std::complex<double>;

// Truncated Taylor expansion about a real center:
//   f(center + d) = sum_{i=0}^{order} coeff(i) d^i + O(d^{order+1}).
// Arithmetic is exact truncated-Taylor algebra; binary operations truncate
// to the smaller order.
class Jet {
 public:
  Jet(double center, std::vector<Complex> coeffs);

  static Jet constant(double center, Complex v, int order);
  static Jet variable(double center, int order);  // u |-> u
  // c_i = derivs[i] / i!  (derivs[i] = f^(i)(center)).
  static Jet from_derivatives(double center, const std::vector<Complex>& derivs);

  double center() const { return center_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  Complex value() const { return c_[0]; }
  Complex coeff(int i) const;
  const std::vector<Complex>& coeffs() const { return c_; }

  Jet truncated(int new_order) const;
  Jet derivative() const;  // d/du; order drops by one

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  // Quotient; requires b.value() != 0 unless both jets carry the same
  // number of exactly-zero leading coefficients, which cancel.
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(Complex s, const Jet& a);

 private:
  double center_;
  std::vector<Complex> c_;
};

// Composition outer(g): outer holds the Taylor coefficients of a scalar
// function about g.value(); evaluated by Horner in jet arithmetic.
Jet compose(const std::vector<Complex>& outer, const Jet& g);

// Elementary lifts.
Jet sinh_jet(double center, int order);
Jet cosh_jet(double center, int order);
Jet exp_jet(const Jet& g);
Jet log_jet(const Jet& g);               // requires g.value() off the cut
Jet pow_jet(const Jet& g, Complex a);    // g(u)^a via exp(a log g)

// One application of the operator (1/sinh u) d/du. The result has order
// one less than min(f.order() - 1, sinh_u.order()). At center 0, exact
// odd-coefficient structure makes the division regular.
Jet tau_derivative(const Jet& f, const Jet& sinh_u);

}  // namespace hypwave
