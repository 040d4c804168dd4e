#include "specgeo/geometry.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "specgeo/errors.hpp"

namespace specgeo {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

Angle Angle::exact(long p, long q) {
  if (p <= 0 || q <= 0) throw DomainError("Angle: p, q must be positive");
  long g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (2 * q < p) throw DomainError("Angle: value exceeds 2*pi");
  Angle a;
  a.exact_ = true;
  a.p_ = p;
  a.q_ = q;
  return a;
}

Angle Angle::radians(double value) {
  if (!(value > 0.0) || value > 2 * kPi + 1e-15)
    throw DomainError("Angle: radians outside (0, 2*pi]");
  Angle a;
  a.exact_ = false;
  a.rad_ = value;
  return a;
}

double Angle::value() const { return exact_ ? kPi * static_cast<double>(p_) / q_ : rad_; }

bool Angle::operator==(const Angle& o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return p_ == o.p_ && q_ == o.q_;
  return rad_ == o.rad_;
}

std::string Angle::to_string() const {
  std::ostringstream os;
  if (exact_)
    os << p_ << "/" << q_ << "pi";
  else
    os << rad_;
  return os.str();
}

bool PolygonSpec::exact() const {
  if (!kappa.exact() || !area.exact() || !perimeter.exact()) return false;
  for (const auto& a : angles)
    if (!a.is_exact()) return false;
  return true;
}

bool OrbisurfaceSpec::exact() const {
  return kappa.exact() && area.exact() && mirror_length.exact();
}

bool AsymptoticSeries::exact() const {
  for (const auto& [n, c] : coefficients)
    if (!c.exact()) return false;
  return true;
}

Scalar AsymptoticSeries::at(int n) const {
  auto it = coefficients.find(n);
  if (it != coefficients.end()) return it->second;
  return exact() ? Scalar(Rational(0)) : Scalar(0.0);
}

void AsymptoticSeries::set(int n, const Scalar& c) {
  if (n < min_n) min_n = n;
  if (n > max_n) max_n = n;
  coefficients[n] = c;
}

std::vector<Violation> validate(const PolygonSpec& spec) {
  std::vector<Violation> out;
  if (!(spec.area.to_double() > 0.0))
    out.push_back({"NonPositiveArea", "area must be > 0"});
  if (spec.perimeter.to_double() < 0.0)
    out.push_back({"NegativePerimeter", "perimeter must be >= 0"});
  for (const auto& a : spec.angles) {
    double v = a.value();
    if (!(v > 0.0) || v > 2 * kPi + 1e-12)
      out.push_back({"AngleOutOfRange", "angle " + a.to_string()});
  }
  // Gauss-Bonnet closure: chi must be an integer.
  if (out.empty()) {
    try {
      euler_characteristic_polygon(spec);
    } catch (const NonIntegerEuler& e) {
      out.push_back({"NonIntegerEuler", e.what()});
    }
  }
  return out;
}

std::vector<Violation> validate(const OrbisurfaceSpec& spec) {
  std::vector<Violation> out;
  if (!(spec.area.to_double() > 0.0))
    out.push_back({"NonPositiveArea", "area must be > 0"});
  if (spec.mirror_length.to_double() < 0.0)
    out.push_back({"NegativeMirrorLength", "mirror_length must be >= 0"});
  for (long n : spec.cone_orders)
    if (n < 2) out.push_back({"ConeOrderOutOfRange", "cone order " + std::to_string(n)});
  for (long m : spec.dihedral_half_orders)
    if (m < 1)
      out.push_back({"DihedralOrderOutOfRange", "half-order " + std::to_string(m)});
  if (!spec.dihedral_half_orders.empty() && !(spec.mirror_length.to_double() > 0.0))
    out.push_back({"DihedralWithoutMirror",
                   "dihedral points require a nonempty mirror locus"});
  return out;
}

Rational euler_characteristic_polygon(const PolygonSpec& spec) {
  long m = static_cast<long>(spec.angles.size());
  if (spec.exact()) {
    // chi = (M*pi + area*kappa - sum gamma) / (2 pi)
    PiPoly sum_gamma;
    for (const auto& a : spec.angles)
      sum_gamma += PiPoly::monomial(a.pi_fraction(), 2);
    PiPoly numer = PiPoly::monomial(Rational(m), 2) +
                   spec.area.poly() * spec.kappa.poly() - sum_gamma;
    PiPoly chi = numer / PiPoly::monomial(Rational(2), 2);
    if (!chi.is_rational() || !chi.rational_part().is_integer()) {
      if (chi.is_zero()) return Rational(0);
      throw NonIntegerEuler("Gauss-Bonnet residual is not an integer: chi = " +
                            chi.to_string());
    }
    return chi.rational_part();
  }
  double sum_gamma = 0.0;
  for (const auto& a : spec.angles) sum_gamma += a.value();
  double chi =
      (m * kPi + spec.area.to_double() * spec.kappa.to_double() - sum_gamma) /
      (2 * kPi);
  double rounded = std::round(chi);
  if (std::abs(chi - rounded) > 1e-9)
    throw NonIntegerEuler("Gauss-Bonnet residual " + std::to_string(chi - rounded));
  return Rational(static_cast<long>(rounded));
}

Rational euler_characteristic_orbifold(const OrbisurfaceSpec& spec,
                                       long chi_underlying) {
  Rational chi(chi_underlying);
  for (long m : spec.dihedral_half_orders)
    chi -= Rational(1, 2) * (Rational(1) - Rational(1, m));
  for (long n : spec.cone_orders) chi -= Rational(1) - Rational(1, n);
  return chi;
}

}  // namespace specgeo
