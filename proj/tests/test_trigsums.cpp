#include <doctest.h>

#include <cmath>

#include "specgeo/errors.hpp"
#include "specgeo/trigsums.hpp"

using namespace specgeo;

TEST_CASE("d coefficients: pinned values") {
  CHECK(d_coeff(0, 0) == Rational(1));
  CHECK(d_coeff(3, 2) == Rational(0));
  CHECK(d_coeff(2, 4) == Rational(1, 3));
  CHECK(d_coeff(1, 1) == Rational(1));
  CHECK(d_coeff(2, 6) == Rational(2, 45));
}

TEST_CASE("d coefficients: closed form equals the odd-composition form") {
  for (int k = 0; k <= 12; ++k)
    for (int eta = 0; eta <= 12; ++eta)
      CHECK(d_coeff(k, eta) == d_coeff_composition(k, eta));
}

TEST_CASE("d coefficients: structural zeros") {
  for (int eta = 0; eta <= 10; ++eta)
    for (int k = eta + 1; k <= eta + 4; ++k) CHECK(d_coeff(k, eta) == Rational(0));
  for (int ell = 1; ell <= 5; ++ell)
    for (int eta = 1; eta <= 11; eta += 2) CHECK(d_coeff(2 * ell, eta) == Rational(0));
}

TEST_CASE("sinh power series reconstruction") {
  for (int k = 1; k <= 5; ++k)
    for (double r : {0.1, 0.5}) {
      double truth = std::pow(std::sinh(r), k);
      double series = 0.0;
      for (int eta = 0; eta <= 20; ++eta)
        series += d_coeff(k, eta).to_double() * std::pow(r, eta);
      CHECK(series == doctest::Approx(truth).epsilon(1e-12));
    }
}

TEST_CASE("c_ell values") {
  CHECK(c_ell_c(0, 1.0) == doctest::Approx(1.0));
  for (double s : {0.2, 0.5, 0.9}) {
    CHECK(c_ell_c(0, s) == doctest::Approx(1.0 / (s * s)).epsilon(1e-14));
    CHECK(c_ell_c(1, s) ==
          doctest::Approx(0.5 / (s * s) - 1.0 / (s * s * s * s)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(c_ell_c(0, 1.5), DomainError);
  CHECK_THROWS_AS(c_ell_c(0, 0.0), DomainError);
}

TEST_CASE("direct trigonometric sums") {
  CHECK(trig_sum_direct(2, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trig_sum_direct(3, 1) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(trig_sum_direct(4, 2) == doctest::Approx(9.0).epsilon(1e-13));
}

TEST_CASE("identity residuals") {
  CHECK(identity_residual(2, 0) <= 1e-12);
  CHECK(identity_residual(7, 3) <= 1e-10);
  for (int k = 2; k <= 12; ++k)
    for (int eta = 0; eta <= 4; ++eta) CHECK(identity_residual(k, eta) <= 1e-9);
}

TEST_CASE("closed sums") {
  CHECK(closed_sum(1, 3) == Rational(8, 3));
  CHECK(closed_sum(2, 2) == Rational(1));
  CHECK(closed_sum(3, 2) == Rational(1));
  CHECK_THROWS_AS(closed_sum(4, 5), UnsupportedPower);
  for (int k = 2; k <= 50; ++k)
    for (int n = 1; n <= 3; ++n) {
      double direct = trig_sum_direct(k, n);
      double closed = closed_sum(n, k).to_double();
      CHECK(std::abs(direct - closed) / std::max(1.0, std::abs(closed)) <= 1e-10);
    }
}
