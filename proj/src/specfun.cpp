#include "specgeo/specfun.hpp"

#include <cmath>

#include "specgeo/quadrature.hpp"

namespace specgeo {

namespace {
// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,      57.156235665862923517,
    -59.597960355475491248,      14.136097974741747174,
    -0.49191381609762019978,     0.33994649984811888699e-4,
    0.46523628927048575665e-4,   -0.98374475304879564677e-4,
    0.15808870322491248884e-3,   -0.21026444172410488319e-3,
    0.21743961811521264320e-3,   -0.16431810653676389022e-3,
    0.84418223983852743293e-4,   -0.26190838401581408670e-4,
    0.36899182659531622704e-5};
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  // Valid for Re(z) > 0; callers stay in that half-plane.
  z -= 1.0;
  std::complex<double> sum = kLanczosCoeff[0];
  for (int i = 1; i < 15; ++i) sum += kLanczosCoeff[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double legendre_conical_p(double rho, double d) {
  if (d <= 0.0) return 1.0;
  // P_{-1/2+i rho}(cosh d) = (2/pi) int_0^d cos(rho u) / sqrt(2 cosh d - 2 cosh u) du;
  // substitute u = d - v^2 and use cosh d - cosh u = 2 sinh((d+u)/2) sinh((d-u)/2).
  auto integrand = [&](double v) {
    double v2 = v * v;
    double u = d - v2;
    double denom = 4.0 * std::sinh(0.5 * (d + u)) * std::sinh(0.5 * v2);
    if (v == 0.0) return 2.0 / std::sqrt(2.0 * std::sinh(d));
    return 2.0 * v * std::cos(rho * u) / std::sqrt(denom);
  };
  QuadratureTarget target;
  target.abs_tol = 1e-12;
  target.rel_tol = 1e-11;
  auto r = integrate_adaptive_t<double>(integrand, 0.0, std::sqrt(d), target);
  return (2.0 / 3.14159265358979323846) * r.value;
}

}  // namespace specgeo
