#pragma once

#include <complex>

namespace specgeo {

/// Principal-branch log-Gamma for Re(z) > 0, Lanczos approximation,
/// relative accuracy ~1e-14 on the used domain.
std::complex<double> log_gamma(std::complex<double> z);

/// Legendre function of the first kind of conical order, P_{-1/2 + i rho}(cosh d),
/// via the Mehler-Dirichlet integral; d >= 0.
double legendre_conical_p(double rho, double d);

}  // namespace specgeo
