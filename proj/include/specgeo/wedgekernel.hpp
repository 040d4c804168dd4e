#pragma once

#include <complex>

namespace specgeo {

/// Geodesic polar coordinates about a base point in the curvature -1 plane.
struct HPoint {
  double a;      // radius >= 0
  double alpha;  // angle
};

/// Distance from cosh d = cosh a cosh b - sinh a sinh b cos|alpha - beta|.
double hyp_distance(const HPoint& x, const HPoint& y);

/// Heat kernel of the hyperbolic plane at distance d (unshifted).
double heat_kernel_h2(double d, double t);

/// Shifted kernel e^{t/4} K(d, t).
double heat_kernel_h2_shifted(double d, double t);

/// log of the shifted kernel, computed without underflow at large d^2/t.
double heat_kernel_h2_shifted_log(double d, double t);

/// Same kernel via the spectral formula
/// (1/2pi) int e^{-(1/4+rho^2)t} P_{-1/2+i rho}(cosh d) rho tanh(pi rho) drho.
double heat_kernel_h2_spectral(double d, double t);

/// Dirichlet half-plane kernel (alpha in (0, pi)) by boundary reflection.
double half_plane_kernel(const HPoint& x, const HPoint& y, double t);

/// Dirichlet wedge kernel for interior angle pi/k by the alternating
/// 2k-image sum; k = 1 reduces to the half plane.
double wedge_kernel_images(int k, const HPoint& x, const HPoint& y, double t);

/// Associated Legendre Q_nu^mu(z) for Re nu > -1, Re mu >= 0, z > 1,
/// by the sin^{2nu+1}/(z+cos)^{nu+1-mu} integral representation.
std::complex<double> legendre_Q(std::complex<double> nu, std::complex<double> mu,
                                double z);

/// Product Q_nu^{-i rho}(z) Q_nu^{i rho}(omega) with the overflowing
/// prefactors combined analytically (real nu).
std::complex<double> legendre_QQ_product(double nu, double rho, double z,
                                         double omega);

/// Relative residual of the product-integral identity
/// (2/pi) int cosh(rho(pi-theta)) Q_nu^{-i rho}(cosh a) Q_nu^{i rho}(cosh b) drho
///   = Q_nu(cosh a cosh b - sinh a sinh b cos theta).
/// quad_error, when given, receives the outer quadrature error estimate
/// relative to the right-hand side.
double mehler_identity_residual(double nu, double theta, double a, double b,
                                double* quad_error = nullptr);

/// Relative residual of int_0^inf e^{-st} e^{t/4} K(d,t) dt
///   = (1/2pi) Q_{sqrt(s)-1/2}(cosh d), s > 1/4.
double green_plane_residual(double d, double s, double* quad_error = nullptr);

/// Shifted vertex-term integral
/// (gamma/2pi) int (e^{-u^2/4t}/sqrt(4 pi t)) (e^{u/2}/(e^u-1))
///            ((pi/gamma) coth(pi u /(2 gamma)) - coth(u/2)) du.
double vertex_term_integral(double gamma, double t);

/// Shifted sector trace int_{B_r cap W} K_W^{1/4}(x,x;t) dx for the wedge of
/// angle pi/k, heat kernel by images.
double wedge_sector_trace(int k, double r, double t);

}  // namespace specgeo
