#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "specgeo/errors.hpp"

namespace specgeo {

struct QuadratureTarget {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_intervals = 4000;
};

namespace detail {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule, on [-1,1].
inline constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <typename T, typename F>
void gk15(const F& f, double a, double b, T* value, double* error) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  T fk{}, fg{};
  for (int i = 0; i < 8; ++i) {
    double x = h * kKronrodNodes[i];
    T fv = (i == 7) ? T(f(c)) : T(f(c - x) + f(c + x));
    fk += kKronrodWeights[i] * fv;
    if (i % 2 == 1) fg += kGaussWeights[i / 2] * fv;
  }
  *value = fk * h;
  // |K15 - G7| is a conservative estimate of the K15 error for smooth f.
  *error = std::abs(T(fk - fg)) * std::abs(h);
}

}  // namespace detail

template <typename T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  long evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod integration on [a, b]. Throws
/// QuadratureFailure when the target cannot be met within max_intervals.
template <typename T, typename F>
QuadratureResult<T> integrate_adaptive_t(const F& f, double a, double b,
                                         const QuadratureTarget& target = {}) {
  struct Interval {
    double a, b, error;
    T value;
    bool operator<(const Interval& o) const { return error < o.error; }
  };
  if (a == b) return {T{}, 0.0, 0};
  std::priority_queue<Interval> queue;
  T total{};
  double total_err = 0.0;
  long evals = 0;
  auto push = [&](double x0, double x1) {
    T v;
    double e;
    detail::gk15<T>(f, x0, x1, &v, &e);
    evals += 15;
    total += v;
    total_err += e;
    queue.push({x0, x1, e, v});
  };
  push(a, b);
  int splits = 0;
  while (total_err > target.abs_tol &&
         total_err > target.rel_tol * std::abs(total)) {
    if (++splits > target.max_intervals)
      throw QuadratureFailure("adaptive quadrature did not converge", total_err);
    Interval worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw QuadratureFailure("interval underflow in adaptive quadrature", total_err);
    push(worst.a, mid);
    push(mid, worst.b);
  }
  return {total, total_err, evals};
}

inline QuadratureResult<double> integrate_adaptive(
    const std::function<double(double)>& f, double a, double b,
    const QuadratureTarget& target = {}) {
  return integrate_adaptive_t<double>(f, a, b, target);
}

inline QuadratureResult<std::complex<double>> integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureTarget& target = {}) {
  return integrate_adaptive_t<std::complex<double>>(f, a, b, target);
}

}  // namespace specgeo
