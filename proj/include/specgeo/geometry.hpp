#pragma once

#include <map>
#include <string>
#include <vector>

#include "specgeo/scalar.hpp"

namespace specgeo {

/// An interior angle in (0, 2*pi], either exact (p/q)*pi or float radians.
class Angle {
 public:
  static Angle exact(long p, long q);
  static Angle radians(double value);

  bool is_exact() const { return exact_; }
  long p() const { return p_; }
  long q() const { return q_; }
  double value() const;
  Rational pi_fraction() const { return Rational(p_, q_); }  // exact only

  bool operator==(const Angle& o) const;
  bool operator<(const Angle& o) const { return value() < o.value(); }

  std::string to_string() const;

 private:
  bool exact_ = true;
  long p_ = 1, q_ = 1;
  double rad_ = 0.0;
};

struct PolygonSpec {
  Scalar kappa;      // Gaussian curvature, 1/length^2
  Scalar area;       // length^2
  Scalar perimeter;  // length, generalized |E| = 2 L(E) convention
  std::vector<Angle> angles;

  bool exact() const;
};

struct OrbisurfaceSpec {
  Scalar kappa;
  Scalar area;
  Scalar mirror_length;                  // total reflector-edge length
  std::vector<long> cone_orders;         // n_j >= 2
  std::vector<long> dihedral_half_orders;  // m_i >= 1 (isotropy order 2m)

  bool exact() const;
};

/// Truncated small-t expansion: map n -> coefficient of t^(n/2).
struct AsymptoticSeries {
  std::map<int, Scalar> coefficients;
  int min_n = -2;
  int max_n = 0;
  Scalar kappa;  // provenance

  bool exact() const;
  Scalar at(int n) const;
  void set(int n, const Scalar& c);
};

struct Violation {
  std::string code;
  std::string detail;
};

std::vector<Violation> validate(const PolygonSpec& spec);
std::vector<Violation> validate(const OrbisurfaceSpec& spec);

/// chi = (M*pi + area*kappa - sum gamma_i) / (2*pi); must be an integer
/// (exact mode) or within 1e-9 of one (float mode).
Rational euler_characteristic_polygon(const PolygonSpec& spec);

/// chi(O) = chi(X_O) - (1/2) sum (1 - 1/m_i) - sum (1 - 1/n_j).
Rational euler_characteristic_orbifold(const OrbisurfaceSpec& spec,
                                       long chi_underlying);

}  // namespace specgeo
