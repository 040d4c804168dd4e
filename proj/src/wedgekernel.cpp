#include "specgeo/wedgekernel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specgeo/errors.hpp"
#include "specgeo/numkit.hpp"
#include "specgeo/quadrature.hpp"
#include "specgeo/specfun.hpp"

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

double acosh1p(double x) {
  // acosh(1 + x) for x >= 0, stable near 0.
  if (x <= 0.0) return 0.0;
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

// (base^n - 1) without cancellation for base near 1.
double pow_minus_one(double base, double n) { return std::expm1(n * std::log(base)); }

double reduce_angle(double alpha) {
  double a = std::fmod(alpha, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}

// Scaled tail integral J_s(d,t) = e^{d^2/4t} int_d^inf rho e^{-rho^2/4t}
// / sqrt(cosh rho - cosh d) drho, via rho = d + u^2 and the product form of
// the cosh difference.
double kernel_tail_integral_scaled(double d, double t) {
  if (d == 0.0) {
    // integrand rho e^{-rho^2/4t} / (sqrt(2) sinh(rho/2)); finite at 0.
    auto f = [&](double rho) {
      if (rho == 0.0) return 2.0 / std::sqrt(2.0);
      return rho * std::exp(-rho * rho / (4 * t)) /
             (std::sqrt(2.0) * std::sinh(0.5 * rho));
    };
    double upper = std::sqrt(260.0 * t) + 2.0;
    auto r = integrate_adaptive_t<double>(f, 0.0, upper,
                                          {1e-14, 1e-12, 4000});
    return r.value;
  }
  auto f = [&](double u) {
    double u2 = u * u;
    double rho = d + u2;
    if (u == 0.0) return 2.0 * d / std::sqrt(std::sinh(d));
    double denom = 2.0 * std::sinh(0.5 * (rho + d)) * std::sinh(0.5 * u2);
    double expo = std::exp(-(2.0 * d * u2 + u2 * u2) / (4.0 * t));
    return 2.0 * u * rho * expo / std::sqrt(denom);
  };
  double upper = std::sqrt(std::max(0.0, std::sqrt(d * d + 280.0 * t) - d)) + 0.5;
  auto r = integrate_adaptive_t<double>(f, 0.0, upper, {1e-14, 1e-12, 4000});
  return r.value;
}

}  // namespace

double hyp_distance(const HPoint& x, const HPoint& y) {
  double delta = reduce_angle(x.alpha - y.alpha);
  if (delta > kPi) delta = 2 * kPi - delta;
  double sh = std::sin(0.5 * delta);
  double dh = std::sinh(0.5 * (x.a - y.a));
  // cosh d - 1 = 2 sinh^2((a-b)/2) + 2 sinh a sinh b sin^2(delta/2)
  double excess = 2.0 * dh * dh + 2.0 * std::sinh(x.a) * std::sinh(y.a) * sh * sh;
  return acosh1p(excess);
}

double heat_kernel_h2_shifted_log(double d, double t) {
  if (!(t > 0.0)) throw DomainError("heat_kernel_h2: t must be positive");
  if (d < 0.0) throw DomainError("heat_kernel_h2: d must be >= 0");
  double js = kernel_tail_integral_scaled(d, t);
  if (!(js > 0.0))
    throw QuadratureFailure("heat kernel integral not positive", 0.0);
  return 0.5 * std::log(2.0) - 1.5 * std::log(4.0 * kPi * t) -
         d * d / (4.0 * t) + std::log(js);
}

double heat_kernel_h2_shifted(double d, double t) {
  double lg = heat_kernel_h2_shifted_log(d, t);
  return lg < -700.0 ? 0.0 : std::exp(lg);
}

double heat_kernel_h2(double d, double t) {
  return std::exp(-0.25 * t) * heat_kernel_h2_shifted(d, t);
}

double heat_kernel_h2_spectral(double d, double t) {
  if (!(t > 0.0)) throw DomainError("heat_kernel_h2_spectral: t must be positive");
  double cutoff = std::sqrt((d * d / (4.0 * t) + 50.0) / t) + 5.0;
  auto f = [&](double rho) {
    return std::exp(-(0.25 + rho * rho) * t) * legendre_conical_p(rho, d) * rho *
           std::tanh(kPi * rho);
  };
  auto r = integrate_adaptive_t<double>(f, 0.0, cutoff, {1e-14, 1e-11, 4000});
  return r.value / (2.0 * kPi);
}

double half_plane_kernel(const HPoint& x, const HPoint& y, double t) {
  HPoint y_reflected{y.a, -y.alpha};
  return heat_kernel_h2(hyp_distance(x, y), t) -
         heat_kernel_h2(hyp_distance(x, y_reflected), t);
}

double wedge_kernel_images(int k, const HPoint& x, const HPoint& y, double t) {
  if (k < 1) throw DomainError("wedge_kernel_images: k >= 1 required");
  double gamma = kPi / k;
  double sum = 0.0;
  for (int j = 1; j <= 2 * k; ++j) {
    double theta_j = (j % 2 == 1) ? (j - 1) * gamma + y.alpha : j * gamma - y.alpha;
    double kj = heat_kernel_h2(hyp_distance(x, HPoint{y.a, theta_j}), t);
    sum += (j % 2 == 1) ? kj : -kj;
  }
  return sum;
}

std::complex<double> legendre_Q(std::complex<double> nu, std::complex<double> mu,
                                double z) {
  if (z <= 1.0) throw DomainError("legendre_Q: z > 1 required");
  if (nu.real() <= -1.0) throw DomainError("legendre_Q: Re nu > -1 required");
  if (mu.real() < 0.0) throw DomainError("legendre_Q: Re mu >= 0 required");
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> power = mu - nu - 1.0;
  auto f = [&](double u) -> std::complex<double> {
    double s = std::sin(u);
    if (s <= 0.0) return {0.0, 0.0};
    return std::exp((2.0 * nu + 1.0) * std::log(s) + power * std::log(z + std::cos(u)));
  };
  auto r = integrate_adaptive_complex(f, 0.0, kPi, {1e-13, 1e-11, 4000});
  std::complex<double> lg = log_gamma(nu + 1.0 + mu) - log_gamma(nu + 1.0);
  std::complex<double> prefactor =
      std::exp(mu * kPi * i + lg - (nu + 1.0) * std::log(2.0) -
               0.5 * mu * std::log(z * z - 1.0));
  return prefactor * r.value;
}

std::complex<double> legendre_QQ_product(double nu, double rho, double z,
                                         double omega) {
  if (z <= 1.0 || omega <= 1.0)
    throw DomainError("legendre_QQ_product: arguments must exceed 1");
  const std::complex<double> i(0.0, 1.0);
  auto integral = [&](std::complex<double> mu, double arg) {
    std::complex<double> power = mu - nu - 1.0;
    auto f = [&](double u) -> std::complex<double> {
      double s = std::sin(u);
      if (s <= 0.0) return {0.0, 0.0};
      return std::exp((2.0 * nu + 1.0) * std::log(s) +
                      power * std::log(arg + std::cos(u)));
    };
    return integrate_adaptive_complex(f, 0.0, kPi, {1e-13, 1e-11, 4000}).value;
  };
  // e^{-i rho pi i} e^{i rho pi i} = 1; Gamma ratio is real for real nu.
  double log_gamma_ratio =
      2.0 * log_gamma(std::complex<double>(nu + 1.0, rho)).real() -
      2.0 * log_gamma(std::complex<double>(nu + 1.0, 0.0)).real();
  std::complex<double> phase =
      std::exp(i * (0.5 * rho) * (std::log(z * z - 1.0) - std::log(omega * omega - 1.0)));
  std::complex<double> pre =
      std::exp(log_gamma_ratio - (2.0 * nu + 2.0) * std::log(2.0)) * phase;
  return pre * integral(-i * rho, z) * integral(i * rho, omega);
}

double mehler_identity_residual(double nu, double theta, double a, double b,
                                double* quad_error) {
  if (!(theta > 0.0) || theta >= 2 * kPi)
    throw DomainError("mehler_identity_residual: theta must lie in (0, 2*pi)");
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("mehler_identity_residual: a, b must be positive");
  double z = std::cosh(a), omega = std::cosh(b);
  double eps = kPi - std::abs(kPi - theta);  // decay rate of the integrand

  // Cutoff from the product bound |QQ| <= C (nu+1+rho)^{2nu+1} e^{-pi rho}.
  double big_a = nu + 1.0, big_b = 2.0 * nu + 1.0;
  double gamma_nu = std::exp(log_gamma(std::complex<double>(nu + 1.0, 0.0)).real());
  double c0 = kPi * kPi * kPi * kPi /
              (std::sqrt((z - 1.0) * (omega - 1.0)) * gamma_nu * gamma_nu);
  double cutoff = 10.0;
  for (;; cutoff *= 1.5) {
    if (cutoff > 1e4) throw QuadratureFailure("mehler: no usable cutoff", 1.0);
    double slope = eps - big_b / (big_a + cutoff);
    if (slope <= 0.0) continue;
    double tail = c0 * std::pow(big_a + cutoff, big_b) * std::exp(-eps * cutoff) / slope;
    if (tail < 1e-12) break;
  }

  auto f = [&](double rho) -> std::complex<double> {
    return std::cosh(rho * (kPi - theta)) * legendre_QQ_product(nu, rho, z, omega);
  };
  auto lhs_int = integrate_adaptive_complex(f, 0.0, cutoff, {1e-11, 1e-9, 600});
  std::complex<double> lhs = (2.0 / kPi) * lhs_int.value;

  double arg = z * omega - std::sinh(a) * std::sinh(b) * std::cos(theta);
  std::complex<double> rhs = legendre_Q(std::complex<double>(nu, 0.0),
                                        std::complex<double>(0.0, 0.0), arg);
  if (quad_error) *quad_error = (2.0 / kPi) * lhs_int.error / std::abs(rhs);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double green_plane_residual(double d, double s, double* quad_error) {
  if (!(s > 0.25)) throw DomainError("green_plane_residual: s > 1/4 required");
  if (!(d > 0.0)) throw DomainError("green_plane_residual: d > 0 required");
  double decay = s - 0.25;
  // Choose T so the omitted tail is negligible: the shifted kernel decreases
  // in t past t ~ d and is bounded by its value at T.
  double upper = std::max(4.0, 2.0 * d);
  for (;; upper *= 1.5) {
    double tail = std::exp(-s * upper) * heat_kernel_h2_shifted(d, upper) / decay;
    if (tail < 1e-16) break;
    if (upper > 1e5) throw QuadratureFailure("green: no usable cutoff", tail);
  }
  auto f = [&](double t) { return std::exp(-s * t) * heat_kernel_h2_shifted(d, t); };
  auto lhs = integrate_adaptive_t<double>(f, 0.0, upper, {1e-12, 1e-9, 4000});
  double nu = std::sqrt(s) - 0.5;
  double rhs = legendre_Q(std::complex<double>(nu, 0.0),
                          std::complex<double>(0.0, 0.0), std::cosh(d))
                   .real() /
               (2.0 * kPi);
  if (quad_error) *quad_error = lhs.error / std::abs(rhs);
  return std::abs(lhs.value - rhs) / std::abs(rhs);
}

double vertex_term_integral(double gamma, double t) {
  if (!(gamma > 0.0) || gamma > 2 * kPi + 1e-15)
    throw DomainError("vertex_term_integral: gamma must lie in (0, 2*pi]");
  if (!(t > 0.0)) throw DomainError("vertex_term_integral: t > 0 required");

  const double ratio = kPi / gamma;
  // Taylor coefficients of q(u) = (e^{u/2}/(e^u-1)) ((pi/g) coth(pi u/(2g)) - coth(u/2)):
  // q(u) = 2 sum_{k>=0} C_{k+1} u^{2k} with
  // C_K = sum_{l=1}^{K} B_{2(K-l)}(1/2)/(2(K-l))! * ((pi/g)^{2l}-1) B_{2l}/(2l)!.
  constexpr int kSeriesTerms = 34;
  static thread_local double cached_gamma = -1.0;
  static thread_local std::vector<double> series;
  if (cached_gamma != gamma) {
    series.assign(kSeriesTerms, 0.0);
    for (int k = 0; k < kSeriesTerms; ++k) {
      int big_k = k + 1;
      double ck = 0.0;
      for (int l = 1; l <= big_k; ++l) {
        double bh = (bernoulli_at_half(2 * (big_k - l)) /
                     Rational(factorial(2 * (big_k - l))))
                        .to_double();
        double bn = (bernoulli_number(2 * l) / Rational(factorial(2 * l))).to_double();
        ck += bh * bn * pow_minus_one(ratio, 2.0 * l);
      }
      series[k] = 2.0 * ck;
    }
    cached_gamma = gamma;
  }

  const double patch = std::min(1.0, gamma);
  auto q_series = [&](double u) {
    double u2 = u * u, p = 1.0, acc = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
      acc += series[k] * p;
      p *= u2;
    }
    return acc;
  };
  auto q_direct = [&](double u) {
    double half = 0.5 * u;
    double front = 1.0 / (2.0 * std::sinh(half));
    double bracket = ratio / std::tanh(ratio * half) - 1.0 / std::tanh(half);
    return front * bracket;
  };
  auto integrand = [&](double u) {
    if (u == 0.0) return series[0];
    double q = (u < patch) ? q_series(u) : q_direct(u);
    return std::exp(-u * u / (4.0 * t)) * q;
  };
  double upper = std::max(1.5 * patch, std::sqrt(280.0 * t));
  auto r = integrate_adaptive_t<double>(integrand, 0.0, upper, {1e-13, 1e-11, 4000});
  return gamma / (2.0 * kPi) / std::sqrt(4.0 * kPi * t) * r.value;
}

namespace {

// Cubic Hermite interpolant of log K^{1/4}(d, t) on a uniform d-grid.
class ShiftedKernelTable {
 public:
  ShiftedKernelTable(double d_max, double t, int n) : d_max_(d_max), h_(d_max / n) {
    values_.resize(n + 1);
    for (int i = 0; i <= n; ++i)
      values_[i] = heat_kernel_h2_shifted_log(i * h_, t);
  }

  double log_kernel(double d) const {
    if (d <= 0.0) return values_.front();
    if (d >= d_max_) return values_.back();
    double s = d / h_;
    int i = std::min(static_cast<int>(s), static_cast<int>(values_.size()) - 2);
    double x = s - i;
    double m0 = slope(i), m1 = slope(i + 1);
    double y0 = values_[i], y1 = values_[i + 1];
    double x2 = x * x, x3 = x2 * x;
    return (2 * x3 - 3 * x2 + 1) * y0 + (x3 - 2 * x2 + x) * m0 +
           (-2 * x3 + 3 * x2) * y1 + (x3 - x2) * m1;
  }

  double kernel(double d) const {
    double lg = log_kernel(d);
    return lg < -700.0 ? 0.0 : std::exp(lg);
  }

 private:
  double slope(int i) const {
    // Second-order one-sided stencils at the ends keep quadratics (the
    // -d^2/4t bulk of log K) exactly reproduced in the first interval.
    int n = static_cast<int>(values_.size()) - 1;
    if (i == 0) return 0.5 * (-3.0 * values_[0] + 4.0 * values_[1] - values_[2]);
    if (i == n) return 0.5 * (3.0 * values_[n] - 4.0 * values_[n - 1] + values_[n - 2]);
    return 0.5 * (values_[i + 1] - values_[i - 1]);
  }
  double d_max_, h_;
  std::vector<double> values_;
};

}  // namespace

double wedge_sector_trace(int k, double r, double t) {
  if (k < 2) throw DomainError("wedge_sector_trace: k >= 2 required");
  if (!(r > 0.0) || !(t > 0.0)) throw DomainError("wedge_sector_trace: r, t > 0");

  const double gamma = kPi / k;
  ShiftedKernelTable table(2.0 * r + 0.25, t, 1200);

  // j = 1 image: the diagonal plane kernel times the sector area.
  double area = gamma * (std::cosh(r) - 1.0);
  double total = area * heat_kernel_h2_shifted(0.0, t);

  // Odd images 2m+1, m = 1..k-1: angular separation 2 m gamma, independent of
  // the angle coordinate; d(a) from cosh d - 1 = 2 sinh^2(a) sin^2(m gamma).
  for (int m = 1; m <= k - 1; ++m) {
    double sm = std::sin(m * gamma);
    auto f = [&](double a) {
      double sa = std::sinh(a);
      return table.kernel(acosh1p(2.0 * sa * sa * sm * sm)) * sa;
    };
    auto rr = integrate_adaptive_t<double>(f, 0.0, r, {1e-13, 1e-10, 4000});
    total += gamma * rr.value;
  }

  // Even images fold into the half-plane reflection integral
  // 2 int_0^r int_0^{pi/2} K^{1/4}(d(a, beta)) sinh a dbeta da.
  auto outer = [&](double a) {
    double sa = std::sinh(a);
    if (sa == 0.0) return 0.0;
    auto inner = [&](double beta) {
      double sb = std::sin(beta);
      return table.kernel(acosh1p(2.0 * sa * sa * sb * sb));
    };
    auto ri = integrate_adaptive_t<double>(inner, 0.0, 0.5 * kPi, {1e-14, 1e-11, 4000});
    return ri.value * sa;
  };
  auto re = integrate_adaptive_t<double>(outer, 0.0, r, {1e-12, 1e-9, 4000});
  total -= 2.0 * re.value;
  return total;
}

}  // namespace specgeo
