#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "specgeo/geometry.hpp"

namespace specgeo {

/// The sequence W_nu = sum_i (pi^{2nu+2} - gamma_i^{2nu+2}) / (pi gamma_i^{2nu+1})
/// for nu = 0..order, as recovered from a series.
struct WSequence {
  std::vector<Scalar> values;
  int order = 0;
};

struct RecoveredAngle {
  Angle angle;
  long multiplicity;
};

struct RecoveredPolygon {
  Scalar area;
  Scalar perimeter;
  Scalar curvature;
  std::vector<RecoveredAngle> angles;
  long euler_char = 0;
  std::vector<std::string> diagnostics;
};

struct RecoveredOrbifold {
  Scalar area;
  Scalar mirror_length;
  Scalar curvature;
  std::vector<long> orders;  // cone order appears twice, dihedral half-order once
  std::vector<std::string> diagnostics;
};

/// (area, perimeter, curvature) from the t^{-1}, t^{-1/2}, t^{1/2} coefficients
/// (t^0 branch when the perimeter vanishes).
std::tuple<Scalar, Scalar, Scalar> recover_basic(const AsymptoticSeries& series);

/// V_nu = [c(t^nu) - (area/4pi) f_{nu+1} kappa^{nu+1}] / kappa^nu for nu <= order.
std::vector<Scalar> recover_vertex_sums(const AsymptoticSeries& series,
                                        const Scalar& area, const Scalar& kappa,
                                        int order);

/// Solve the triangular system expressing V_nu through W_0..W_nu.
WSequence recover_W(const std::vector<Scalar>& vertex_sums);

/// Iterative peeling of the dominant angle from the W sequence.
std::vector<RecoveredAngle> recover_angles(const WSequence& w, double tol,
                                           int max_angles);

/// chi = (M pi + area kappa - sum gamma) / (2 pi), rounded with residual check.
long recover_euler(const std::vector<RecoveredAngle>& angles, const Scalar& area,
                   const Scalar& kappa, long m);

/// sum 1/gamma_i = 24 c0 / pi + (M - 2 chi) / pi in the flat case.
double sum_reciprocal_angles(double c0, long m, long chi);

/// Full polygon recovery pipeline.
RecoveredPolygon recover_polygon(const AsymptoticSeries& series, double tol = 1e-9,
                                 int max_angles = 16);

/// Orbisurface recovery; curvature from the mirror term when present, else
/// the supplied hint is required.
RecoveredOrbifold recover_orbifold(const AsymptoticSeries& series,
                                   std::optional<Scalar> kappa_hint = std::nullopt);

}  // namespace specgeo
