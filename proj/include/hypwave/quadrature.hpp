#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace hypwave {

using Complex = std::complex<double>;

struct QuadResult {
  Complex value{0.0, 0.0};
  double err_est = 0.0;
  bool converged = false;
  std::size_t evals = 0;
};

namespace detail {

// One tanh-sinh node at parameter t > 0: distance-from-endpoint form.
//   u = tanh((pi/2) sinh t),  d = 1 - u  (computed cancellation-free),
//   w = (pi/2) cosh t / cosh^2((pi/2) sinh t).
struct DeNode {
  double d;  // 1 - |abscissa| on [-1,1]; node pair sits at a + h*d, b - h*d
  double w;
};

// Nodes for level L of the tanh-sinh scheme (step h = 2^-L): level 0 holds
// t = 1, 2, ..., later levels the odd multiples of h. t = 0 handled apart.
inline const std::vector<DeNode>& tanh_sinh_level(int level) {
  static std::vector<std::vector<DeNode>> cache = [] {
    constexpr double kPiHalf = 1.570796326794896619231321691639751442;
    constexpr double kTMax = 6.0;
    std::vector<std::vector<DeNode>> levels;
    for (int lv = 0; lv <= 12; ++lv) {
      const double h = std::ldexp(1.0, -lv);
      std::vector<DeNode> nodes;
      for (int j = 0;; ++j) {
        const double t = (lv == 0) ? (j + 1) * h : (2 * j + 1) * h;
        if (t > kTMax) break;
        const double y = kPiHalf * std::sinh(t);
        const double e = std::exp(-2.0 * y);
        const double d = 2.0 * e / (1.0 + e);
        const double ch = std::cosh(y);
        const double w = kPiHalf * std::cosh(t) / (ch * ch);
        if (d <= 0.0 || w <= 0.0) break;
        nodes.push_back({d, w});
      }
      levels.push_back(std::move(nodes));
    }
    return levels;
  }();
  return cache[static_cast<std::size_t>(level)];
}

// Nodes for the exp-sinh map x = a + exp((pi/2) sinh t) on [a, inf).
struct ExpSinhNode {
  double x_off;  // x - a
  double w;      // (pi/2) cosh t * (x - a)
};

inline const std::vector<ExpSinhNode>& exp_sinh_level(int level) {
  // Level layout mirrors tanh_sinh_level but keeps both signs of t
  // (interleaved +t, -t) since the map is not symmetric.
  static std::vector<std::vector<ExpSinhNode>> cache = [] {
    constexpr double kPiHalf = 1.570796326794896619231321691639751442;
    constexpr double kTMax = 6.0;
    std::vector<std::vector<ExpSinhNode>> levels;
    for (int lv = 0; lv <= 12; ++lv) {
      const double h = std::ldexp(1.0, -lv);
      std::vector<ExpSinhNode> nodes;
      for (int j = 0;; ++j) {
        const double t = (lv == 0) ? (j + 1) * h : (2 * j + 1) * h;
        if (t > kTMax) break;
        bool any = false;
        for (const double tt : {t, -t}) {
          const double y = kPiHalf * std::sinh(tt);
          const double ex = std::exp(y);
          const double w = kPiHalf * std::cosh(tt) * ex;
          if (ex > 0.0 && std::isfinite(w) && w > 0.0) {
            nodes.push_back({ex, w});
            any = true;
          }
        }
        if (!any) break;
      }
      levels.push_back(std::move(nodes));
    }
    return levels;
  }();
  return cache[static_cast<std::size_t>(level)];
}

}  // namespace detail

// Tanh-sinh (double-exponential) quadrature on a finite interval [a, b],
// with the integrand receiving its exact distances to both endpoints
// (f(x, dist_a, dist_b)) so endpoint-singular factors can be evaluated
// cancellation-free. f is evaluated strictly inside (a, b). Level doubling
// stops once successive estimates agree to tolerance.
template <class F>
QuadResult tanh_sinh_ex(F&& f, double a, double b, double abs_tol,
                        double rel_tol = 1e-13, int max_level = 10) {
  QuadResult res;
  const double len = b - a;
  const double half = 0.5 * len;
  const double mid = 0.5 * (a + b);
  if (half == 0.0) {
    res.converged = true;
    return res;
  }
  constexpr double kTrunc = 1e-18;

  const Complex center = f(mid, half, half);  // t = 0 node, weight pi/2
  Complex sum = 1.570796326794896619231321691639751442 * center;
  double f_peak = std::abs(center);  // largest |f| seen across all levels
  res.evals = 1;
  Complex prev{0.0, 0.0};
  double h = 1.0;
  for (int lv = 0; lv <= max_level; ++lv) {
    if (lv > 0) h *= 0.5;
    Complex new_terms{0.0, 0.0};
    int small_run = 0;
    for (const auto& nd : detail::tanh_sinh_level(lv)) {
      const double off = half * nd.d;
      const Complex pa = f(a + off, off, len - off);
      const Complex pb = f(b - off, len - off, off);
      f_peak = std::max({f_peak, std::abs(pa), std::abs(pb)});
      const Complex term = nd.w * (pa + pb);
      res.evals += 2;
      new_terms += term;
      // Nodes run from the center toward the endpoints, so small terms mean
      // the level is done only if the remaining weight could not carry mass
      // hidden near an endpoint: the weights decay monotonically, so
      // w * f_peak majorizes every remaining term.
      const double scale = std::abs(sum) + std::abs(new_terms);
      if (std::abs(term) <= kTrunc * scale &&
          nd.w * f_peak <= kTrunc * scale) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
    // The trapezoid value at step h is h * sum; halving h keeps the node sum
    // additive because every previous node is retained.
    sum += new_terms;
    const Complex est = half * h * sum;
    const double delta = std::abs(est - prev);
    if (lv >= 2 &&
        delta <= std::max(abs_tol, rel_tol * std::abs(est))) {
      res.value = est;
      res.err_est = delta;
      res.converged = true;
      return res;
    }
    res.value = est;
    res.err_est = delta;
    prev = est;
  }
  return res;
}

template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double abs_tol,
                     double rel_tol = 1e-13, int max_level = 10) {
  return tanh_sinh_ex([&](double x, double, double) { return f(x); }, a, b,
                      abs_tol, rel_tol, max_level);
}

// Exp-sinh quadrature on [a, inf) for integrands decaying at infinity
// (exponentially or by a power > 1) and at worst integrably singular at a.
template <class F>
QuadResult exp_sinh(F&& f, double a, double abs_tol, double rel_tol = 1e-13,
                    int max_level = 10) {
  QuadResult res;
  constexpr double kTrunc = 1e-18;
  Complex sum = f(a + 1.0);  // t = 0: x - a = 1, weight pi/2
  sum *= 1.570796326794896619231321691639751442;
  res.evals = 1;
  Complex prev{0.0, 0.0};
  double h = 1.0;
  for (int lv = 0; lv <= max_level; ++lv) {
    if (lv > 0) h *= 0.5;
    Complex new_terms{0.0, 0.0};
    int small_run = 0;
    for (const auto& nd : detail::exp_sinh_level(lv)) {
      const Complex fx = f(a + nd.x_off);
      ++res.evals;
      const Complex term = nd.w * fx;
      new_terms += term;
      if (std::abs(term) <= kTrunc * (std::abs(sum) + std::abs(new_terms))) {
        if (++small_run >= 6) break;  // both tails interleaved: wait longer
      } else {
        small_run = 0;
      }
    }
    sum += new_terms;
    const Complex est = h * sum;
    const double delta = std::abs(est - prev);
    if (lv >= 2 &&
        delta <= std::max(abs_tol, rel_tol * std::abs(est))) {
      res.value = est;
      res.err_est = delta;
      res.converged = true;
      return res;
    }
    res.value = est;
    res.err_est = delta;
    prev = est;
  }
  return res;
}

// Single non-adaptive Gauss-Kronrod 7-15 panel; err_est from |K15 - G7|.
QuadResult gauss_kronrod_panel(const std::function<Complex(double)>& f,
                               double a, double b);

// Globally adaptive Gauss-Kronrod with worst-interval-first subdivision.
QuadResult adaptive_gauss_kronrod(const std::function<Complex(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol = 1e-12,
                                  int max_intervals = 4000);

}  // namespace hypwave
