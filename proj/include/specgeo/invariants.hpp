#pragma once

#include "specgeo/geometry.hpp"
#include "specgeo/numkit.hpp"

namespace specgeo {

/// Interior coefficient f_nu = (1/(nu! 4^nu)) sum_l C(nu,l) (-4)^l B_{2l}(1/2).
Rational area_coeff(int nu);

/// Boundary coefficient r_nu = -1/(4^nu nu!).
Rational boundary_coeff(int nu);

/// Vertex coefficient e_nu(gamma); exact Rational for exact angles, double
/// (evaluated at 256-bit precision before rounding) for float angles.
Scalar vertex_coeff(int nu, const Angle& gamma);

/// Sphere interior coefficient i_nu^S for nu >= -1.
Rational sphere_interior_coeff(int nu);

/// Small sphere coefficient i_l^(s) = (-1)^{l+1} B_{2l+2}(1/2) / (l+1)!,
/// defined for l >= -1.
Rational sphere_small_coeff(int l);

/// Lune coefficient c_l^S(pi/k) (curvature-free normalization).
Rational lune_coeff_cS(int ell, int k);

/// Hyperbolic vertex coefficient c_l^H(gamma).
Scalar hyper_vertex_coeff(int ell, const Angle& gamma);

/// Assembled series I_kappa + B_kappa + sum_i V_kappa(gamma_i), truncated so
/// integer powers run up to t^order (exponents n in [-2, 2*order]).
AsymptoticSeries polygon_series(const PolygonSpec& spec, int order);

/// Same expansion assembled from the kappa = -1 theorem's own coefficients
/// i_k^H, b_k^H, nu_k^H; throws WrongCurvature unless kappa == -1 exactly.
AsymptoticSeries hyper_series_legacy(const PolygonSpec& spec, int order);

/// Cone point of order n: coefficient of t^nu is
/// sum_l (2/(4^l l!)) c^S_{nu-l}(pi/n) kappa^nu. n = 1 gives the zero series.
AsymptoticSeries cone_contribution(long n, const Scalar& kappa, int order);

/// Dihedral point of isotropy order 2m: half of cone_contribution(m).
AsymptoticSeries dihedral_contribution(long m, const Scalar& kappa, int order);

/// Mirror locus of given length: coefficient of t^{nu-1/2} is
/// (length/sqrt(4 pi)) kappa^nu / (4^{nu+1} nu!), positive sign.
AsymptoticSeries mirror_contribution(const Scalar& length, const Scalar& kappa,
                                     int order);

/// Full orbisurface expansion: interior + mirror + cone + dihedral parts.
AsymptoticSeries orbifold_series(const OrbisurfaceSpec& spec, int order);

/// Spherical lune of angle pi/k on the sphere of curvature kappa > 0.
AsymptoticSeries lune_series(int k, const Scalar& kappa, int order);

}  // namespace specgeo
