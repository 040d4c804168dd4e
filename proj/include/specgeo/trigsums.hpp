#pragma once

#include "specgeo/numkit.hpp"

namespace specgeo {

/// Coefficient d_k(eta) of r^eta in sinh^k(r), by the closed form
/// (1/(2^k eta!)) sum_p C(k,p) (-1)^p (k-2p)^eta.
Rational d_coeff(int k, int eta);

/// Oracle: d_k(eta) from the composition-of-odd-parts expansion.
Rational d_coeff_composition(int k, int eta);

/// c_l with c = s: sum_tau C(1/2,tau) (-1)^{l-tau} s^{-2(l-tau)-2}.
double c_ell_c(int ell, double s);

/// sum_{j=1}^{k-1} 1/sin(j pi / k)^{2n}, compensated long double accumulation.
double trig_sum_direct(int k, int n);

/// Relative residual of the master identity at (k, eta).
double identity_residual(int k, int eta);

/// Exact closed forms for n = 1, 2, 3; UnsupportedPower beyond.
Rational closed_sum(int n, int k);

}  // namespace specgeo
