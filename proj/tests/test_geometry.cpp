#include <doctest.h>

#include "specgeo/errors.hpp"
#include "specgeo/geometry.hpp"

using namespace specgeo;

namespace {

PolygonSpec unit_square() {
  PolygonSpec s;
  s.kappa = Scalar(Rational(0));
  s.area = Scalar(Rational(1));
  s.perimeter = Scalar(Rational(4));
  for (int i = 0; i < 4; ++i) s.angles.push_back(Angle::exact(1, 2));
  return s;
}

}  // namespace

TEST_CASE("euler characteristic: euclidean square") {
  CHECK(euler_characteristic_polygon(unit_square()) == Rational(1));
}

TEST_CASE("euler characteristic: hyperbolic triangle by area defect") {
  // chi = 1, M = 3: area = pi - sum gamma for kappa = -1.
  PolygonSpec s;
  s.kappa = Scalar(Rational(-1));
  s.angles = {Angle::exact(1, 2), Angle::exact(1, 3), Angle::exact(1, 7)};
  Rational defect = Rational(1) - (Rational(1, 2) + Rational(1, 3) + Rational(1, 7));
  s.area = Scalar(PiPoly::monomial(defect, 2));
  s.perimeter = Scalar(Rational(9));
  CHECK(euler_characteristic_polygon(s) == Rational(1));
}

TEST_CASE("euler characteristic: round sphere via orbifold Gauss-Bonnet") {
  PolygonSpec s;
  s.kappa = Scalar(Rational(1));
  s.area = Scalar(PiPoly::monomial(Rational(4), 2));
  s.perimeter = Scalar(Rational(0));
  CHECK(euler_characteristic_polygon(s) == Rational(2));
}

TEST_CASE("euler characteristic round-trip law (exact)") {
  PolygonSpec s = unit_square();
  Rational chi = euler_characteristic_polygon(s);
  // M pi + area kappa - sum gamma = 2 pi chi exactly.
  PiPoly lhs = PiPoly::monomial(Rational(4), 2) + s.area.poly() * s.kappa.poly();
  for (const auto& a : s.angles) lhs -= PiPoly::monomial(a.pi_fraction(), 2);
  CHECK(lhs == PiPoly::monomial(Rational(2) * chi, 2));
}

TEST_CASE("euler characteristic rejects inconsistent float spec") {
  PolygonSpec s;
  s.kappa = Scalar(0.0);
  s.area = Scalar(1.0);
  s.perimeter = Scalar(4.0);
  s.angles = {Angle::radians(1.0), Angle::radians(1.0)};
  CHECK_THROWS_AS(euler_characteristic_polygon(s), NonIntegerEuler);
}

TEST_CASE("orbifold euler characteristic") {
  OrbisurfaceSpec plain;
  plain.kappa = Scalar(Rational(1));
  plain.area = Scalar(PiPoly::monomial(Rational(4), 2));
  plain.mirror_length = Scalar(Rational(0));
  CHECK(euler_characteristic_orbifold(plain, 2) == Rational(2));

  for (long k = 2; k <= 8; ++k) {
    OrbisurfaceSpec football = plain;
    football.cone_orders = {k, k};
    football.area = Scalar(PiPoly::monomial(Rational(4, k), 2));
    // chi(M/Z_k) = 2/k; cross-check area * kappa = 2 pi chi.
    CHECK(euler_characteristic_orbifold(football, 2) == Rational(2, k));
    CHECK(football.area.poly() * football.kappa.poly() ==
          PiPoly::monomial(Rational(2) * Rational(2, k), 2));

    OrbisurfaceSpec pillow;
    pillow.kappa = Scalar(Rational(1));
    pillow.area = Scalar(PiPoly::monomial(Rational(2, k), 2));
    pillow.mirror_length = Scalar(PiPoly::monomial(Rational(2), 2));
    pillow.dihedral_half_orders = {k, k};
    CHECK(euler_characteristic_orbifold(pillow, 1) == Rational(1, k));
    CHECK(pillow.area.poly() * pillow.kappa.poly() ==
          PiPoly::monomial(Rational(2) * Rational(1, k), 2));
  }
}

TEST_CASE("validate: well-formed square") { CHECK(validate(unit_square()).empty()); }

TEST_CASE("validate: angle out of range is rejected at construction") {
  CHECK_THROWS_AS(Angle::exact(3, 1), DomainError);
  CHECK_THROWS_AS(Angle::radians(7.0), DomainError);
  CHECK_NOTHROW(Angle::exact(2, 1));  // exactly 2 pi allowed
  CHECK_NOTHROW(Angle::exact(1, 1));  // pi allowed (contributes nothing)
}

TEST_CASE("validate: dihedral points require a mirror locus") {
  OrbisurfaceSpec s;
  s.kappa = Scalar(Rational(1));
  s.area = Scalar(PiPoly::monomial(Rational(2, 3), 2));
  s.mirror_length = Scalar(Rational(0));
  s.dihedral_half_orders = {3};
  auto v = validate(s);
  REQUIRE_FALSE(v.empty());
  bool found = false;
  for (const auto& violation : v)
    if (violation.code == "DihedralWithoutMirror") found = true;
  CHECK(found);
}

TEST_CASE("validate: cone order below 2 flagged") {
  OrbisurfaceSpec s;
  s.kappa = Scalar(Rational(1));
  s.area = Scalar(PiPoly::monomial(Rational(4), 2));
  s.mirror_length = Scalar(Rational(0));
  s.cone_orders = {1};
  CHECK_FALSE(validate(s).empty());
}

TEST_CASE("angles of exactly pi are permitted in specs") {
  PolygonSpec s = unit_square();
  s.angles.push_back(Angle::exact(1, 1));
  // Gauss-Bonnet unaffected: the pi angle adds pi to both sides.
  CHECK(euler_characteristic_polygon(s) == Rational(1));
  CHECK(validate(s).empty());
}
