#include "hypwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace hypwave {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

}  // namespace

QuadResult gauss_kronrod_panel(const std::function<Complex(double)>& f,
                               double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const Complex f_mid = f(mid);
  Complex kron = kWgk[7] * f_mid;
  Complex gauss = kWg[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const Complex lo = f(mid - half * kXgk[i]);
    const Complex hi = f(mid + half * kXgk[i]);
    kron += kWgk[i] * (lo + hi);
    if (i % 2 == 1) gauss += kWg[i / 2] * (lo + hi);
  }
  QuadResult res;
  res.value = half * kron;
  res.err_est = std::abs(half * (kron - gauss));
  res.converged = true;
  res.evals = 15;
  return res;
}

QuadResult adaptive_gauss_kronrod(const std::function<Complex(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol, int max_intervals) {
  struct Interval {
    double a, b;
    Complex value;
    double err;
    long seq;
  };
  // Worst error first; ties broken by insertion order for determinism.
  auto worse = [](const Interval& p, const Interval& q) {
    return std::tie(p.err, q.seq) < std::tie(q.err, p.seq);
  };
  std::priority_queue<Interval, std::vector<Interval>, decltype(worse)> heap(
      worse);

  QuadResult res;
  long seq = 0;
  QuadResult first = gauss_kronrod_panel(f, a, b);
  res.evals = first.evals;
  heap.push({a, b, first.value, first.err_est, seq++});
  Complex total = first.value;
  double err_total = first.err_est;

  while (static_cast<int>(heap.size()) < max_intervals) {
    if (err_total <= std::max(abs_tol, rel_tol * std::abs(total))) {
      res.value = total;
      res.err_est = err_total;
      res.converged = true;
      return res;
    }
    Interval worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {
      // Interval no longer splittable in double precision; keep as is.
      heap.push(worst);
      break;
    }
    QuadResult left = gauss_kronrod_panel(f, worst.a, m);
    QuadResult right = gauss_kronrod_panel(f, m, worst.b);
    res.evals += left.evals + right.evals;
    total += left.value + right.value - worst.value;
    err_total += left.err_est + right.err_est - worst.err;
    heap.push({worst.a, m, left.value, left.err_est, seq++});
    heap.push({m, worst.b, right.value, right.err_est, seq++});
  }
  res.value = total;
  res.err_est = err_total;
  res.converged = err_total <= std::max(abs_tol, rel_tol * std::abs(total));
  return res;
}

}  // namespace hypwave
